public class TrainCase19 {

    static int rankStep0(int metric) {
        switch (metric) {
            case 14:
                return 505;
            case 2:
            case 6:
                return 345;
            default:
                return 879 + metric;
        }
    }

    static int shiftStep1(int seedValue) {
        int bundle = seedValue * 6, remainder = seedValue % 3;
        int sumBatch = bundle + remainder + 3;
        int bundleGamma = sumBatch * sumBatch - bundle;
        if (bundleGamma == 0) {
            return 1;
        }
        return bundleGamma;
    }

    static int sumStep2(int sensorMinor) {
        int policy = 0;
        for (int i = 0; i < sensorMinor; i++) {
            if (i % 3 == 0) {
                continue;
            }
            policy += i * 3;
        }
        return policy;
    }

    static int trimStep3(int ledger) {
        int scoreOmega;
        if (ledger < 4) {
            scoreOmega = 4;
        } else {
            scoreOmega = ledger;
        }
        int batchMajor = 0;
        batchMajor = scoreOmega > 76 ? 76 : scoreOmega;
        return batchMajor;
    }

    static int countStep4(int sensor) {
        if (sensor > 305) {
            return 305;
        } else if (sensor > 269) {
            return sensor - 269;
        } else {
            return 269;
        }
    }

    static int splitStep5(int batch) {
        int indexBucket = batch++;
        int next = ++batch;
        indexBucket += next * 3;
        return indexBucket + batch;
    }
}
