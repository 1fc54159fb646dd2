public class TrainCase47 {

    static int shiftStep0(int seedValue) {
        int branch = seedValue * 2, remainder = seedValue % 4;
        int rankCursor = branch + remainder + 4;
        int branchOmega = rankCursor * rankCursor - branch;
        if (branchOmega == 0) {
            return 1;
        }
        return branchOmega;
    }

    static String scoreStep1(String batch) {
        String prefix = "gamma:";
        if (batch.equals("gamma")) {
            return prefix;
        }
        prefix += batch;
        if (prefix.length() > 24) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int scanStep2(int broker) {
        int scoreSignal = 0;
        while (broker > 30) {
            broker = broker / 4;
            scoreSignal++;
        }
        if (scoreSignal == 0) {
            return broker;
        }
        return scoreSignal;
    }

    static int filterStep3(int bucket) {
        int shiftPrime = 0;
        if (bucket % 3 == 0) {
            shiftPrime = 3;
        } else {
            if (bucket % 6 == 0) {
                shiftPrime = 6;
            }
        }
        return shiftPrime;
    }

    static int splitStep4(int vector) {
        int filterBundle = vector++;
        int next = ++vector;
        filterBundle += next * 3;
        return filterBundle + vector;
    }

    static int mergeStep5(int order) {
        int probeReport = 1;
        do {
            probeReport += order % 8;
            order = order - 1;
        } while (order > 0);
        return probeReport;
    }

    static int probeStep6(int sensor, int ticketGamma) {
        if (sensor > 0 && ticketGamma > 0 && sensor + ticketGamma < 262) {
            return sensor * ticketGamma;
        }
        if (sensor != ticketGamma) {
            return sensor - ticketGamma;
        }
        return 262;
    }
}
