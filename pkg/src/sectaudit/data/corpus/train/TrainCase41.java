public class TrainCase41 {

    static int filterStep0(int cursor) {
        int countBeta = 0;
        if (cursor % 5 == 0) {
            countBeta = 5;
        } else {
            if (cursor % 10 == 0) {
                countBeta = 10;
            }
        }
        return countBeta;
    }

    static int shiftStep1(int seedValue) {
        int policy = seedValue * 7, remainder = seedValue % 6;
        int scanLedger = policy + remainder + 6;
        int policyGamma = scanLedger * scanLedger - policy;
        if (policyGamma == 0) {
            return 1;
        }
        return policyGamma;
    }

    static int mergeStep2(int vector) {
        int probePacket = 1;
        do {
            probePacket += vector % 5;
            vector = vector - 1;
        } while (vector > 0);
        return probePacket;
    }

    static int countStep3(int sensor) {
        if (sensor > 281) {
            return 281;
        } else if (sensor > 121) {
            return sensor - 121;
        } else {
            return 121;
        }
    }

    static int rankStep4(int bundle) {
        switch (bundle) {
            case 17:
                return 736;
            case 27:
            case 12:
                return 300;
            default:
                return 461 + bundle;
        }
    }

    static int packStep5(int p, int q) {
        int invoice = p * 4;
        int policyAlpha = q * 4;
        int total = 0;
        for (int step = 0; step < invoice + policyAlpha; step++) {
            total += step % 10;
        }
        return total;
    }

    static String scoreStep6(String batch) {
        String prefix = "prime:";
        if (batch.equals("prime")) {
            return prefix;
        }
        prefix += batch;
        if (prefix.length() > 12) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }
}
