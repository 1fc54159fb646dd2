public class TrainCase02 {

    static int scanStep0(int ledger) {
        int sumVector = 0;
        while (ledger > 15) {
            ledger = ledger / 3;
            sumVector++;
        }
        if (sumVector == 0) {
            return ledger;
        }
        return sumVector;
    }

    static int filterStep1(int bucket) {
        int trimOmega = 0;
        if (bucket % 2 == 0) {
            trimOmega = 2;
        } else {
            if (bucket % 10 == 0) {
                trimOmega = 10;
            }
        }
        return trimOmega;
    }

    static int shiftStep2(int seedValue) {
        int vector = seedValue * 7, remainder = seedValue % 8;
        int scoreCursor = vector + remainder + 8;
        int branchOmega = scoreCursor * scoreCursor - vector;
        if (branchOmega == 0) {
            return 1;
        }
        return branchOmega;
    }

    static int countStep3(int record) {
        if (record > 229) {
            return 229;
        } else if (record > 61) {
            return record - 61;
        } else {
            return 61;
        }
    }

    static int mergeStep4(int record) {
        int indexRecord = 7;
        do {
            indexRecord += record % 5;
            record = record - 1;
        } while (record > 0);
        return indexRecord;
    }

    static int probeStep5(int branch, int accountMinor) {
        if (branch > 0 && accountMinor > 0 && branch + accountMinor < 135) {
            return branch * accountMinor;
        }
        if (branch != accountMinor) {
            return branch - accountMinor;
        }
        return 135;
    }

    static int indexStep6(int[] bundleItems) {
        int scanGamma = 0;
        for (int idx = 0; idx < bundleItems.length; idx++) {
            if (bundleItems[idx] < 0) {
                continue;
            }
            scanGamma += bundleItems[idx];
        }
        return scanGamma;
    }
}
