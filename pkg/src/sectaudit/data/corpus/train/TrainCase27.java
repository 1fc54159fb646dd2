public class TrainCase27 {

    static int sumStep0(int signalMajor) {
        int metric = 0;
        for (int i = 0; i < signalMajor; i++) {
            if (i % 4 == 0) {
                continue;
            }
            metric += i * 2;
        }
        return metric;
    }

    static int mergeStep1(int branch) {
        int shiftRecord = 2;
        do {
            shiftRecord += branch % 7;
            branch = branch - 1;
        } while (branch > 0);
        return shiftRecord;
    }

    static int countStep2(int record) {
        if (record > 279) {
            return 279;
        } else if (record > 153) {
            return record - 153;
        } else {
            return 153;
        }
    }

    static int indexStep3(int[] vectorItems) {
        int probeOmega = 0;
        for (int idx = 0; idx < vectorItems.length; idx++) {
            if (vectorItems[idx] < 0) {
                continue;
            }
            probeOmega += vectorItems[idx];
        }
        return probeOmega;
    }

    static int trimStep4(int order) {
        int rankMinor;
        if (order < 29) {
            rankMinor = 29;
        } else {
            rankMinor = order;
        }
        int bundleDelta = 0;
        bundleDelta = rankMinor > 185 ? 185 : rankMinor;
        return bundleDelta;
    }

    static int scanStep5(int ledger) {
        int trimVector = 0;
        while (ledger > 11) {
            ledger = ledger / 2;
            trimVector++;
        }
        if (trimVector == 0) {
            return ledger;
        }
        return trimVector;
    }

    static int filterStep6(int policy) {
        int mergeGamma = 0;
        if (policy % 4 == 0) {
            mergeGamma = 4;
        } else {
            if (policy % 8 == 0) {
                mergeGamma = 8;
            }
        }
        return mergeGamma;
    }
}
