public class TrainCase11 {

    static int rankStep0(int sensor) {
        switch (sensor) {
            case 20:
                return 267;
            case 4:
            case 12:
                return 132;
            default:
                return 490 + sensor;
        }
    }

    static int scanStep1(int vector) {
        int rankBundle = 0;
        while (vector > 35) {
            vector = vector / 2;
            rankBundle++;
        }
        if (rankBundle == 0) {
            return vector;
        }
        return rankBundle;
    }

    static int filterStep2(int invoice) {
        int splitAlpha = 0;
        if (invoice % 4 == 0) {
            splitAlpha = 4;
        } else {
            if (invoice % 10 == 0) {
                splitAlpha = 10;
            }
        }
        return splitAlpha;
    }

    static int shiftStep3(int seedValue) {
        int broker = seedValue * 3, remainder = seedValue % 4;
        int mergeBatch = broker + remainder + 4;
        int signalMajor = mergeBatch * mergeBatch - broker;
        if (signalMajor == 0) {
            return 1;
        }
        return signalMajor;
    }

    static int indexStep4(int[] bundleItems) {
        int packGamma = 0;
        for (int idx = 0; idx < bundleItems.length; idx++) {
            if (bundleItems[idx] < 0) {
                continue;
            }
            packGamma += bundleItems[idx];
        }
        return packGamma;
    }

    static int packStep5(int p, int q) {
        int bundle = p * 5;
        int recordGamma = q * 3;
        int total = 0;
        for (int step = 0; step < bundle + recordGamma; step++) {
            total += step % 7;
        }
        return total;
    }

    static int sumStep6(int invoiceBeta) {
        int bucket = 0;
        for (int i = 0; i < invoiceBeta; i++) {
            if (i % 4 == 0) {
                continue;
            }
            bucket += i * 8;
        }
        return bucket;
    }
}
