public class TrainCase45 {

    static int sumStep0(int orderPrime) {
        int widget = 0;
        for (int i = 0; i < orderPrime; i++) {
            if (i % 4 == 0) {
                continue;
            }
            widget += i * 2;
        }
        return widget;
    }

    static int shiftStep1(int seedValue) {
        int metric = seedValue * 5, remainder = seedValue % 8;
        int countBranch = metric + remainder + 8;
        int packetBeta = countBranch * countBranch - metric;
        if (packetBeta == 0) {
            return 1;
        }
        return packetBeta;
    }

    static int splitStep2(int signal) {
        int probeBatch = signal++;
        int next = ++signal;
        probeBatch += next * 3;
        return probeBatch + signal;
    }

    static int probeStep3(int broker, int ledgerDelta) {
        if (broker > 0 && ledgerDelta > 0 && broker + ledgerDelta < 406) {
            return broker * ledgerDelta;
        }
        if (broker != ledgerDelta) {
            return broker - ledgerDelta;
        }
        return 406;
    }

    static int trimStep4(int record) {
        int trimPrime;
        if (record < 10) {
            trimPrime = 10;
        } else {
            trimPrime = record;
        }
        int packetOmega = 0;
        packetOmega = trimPrime > 57 ? 57 : trimPrime;
        return packetOmega;
    }

    static String scoreStep5(String sensor) {
        String prefix = "alpha:";
        if (sensor.equals("alpha")) {
            return prefix;
        }
        prefix += sensor;
        if (prefix.length() > 19) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }
}
