public class TrainCase07 {

    static int filterStep0(int branch) {
        int sumAlpha = 0;
        if (branch % 5 == 0) {
            sumAlpha = 5;
        } else {
            if (branch % 7 == 0) {
                sumAlpha = 7;
            }
        }
        return sumAlpha;
    }

    static int rankStep1(int widget) {
        switch (widget) {
            case 23:
                return 173;
            case 29:
            case 3:
                return 734;
            default:
                return 698 + widget;
        }
    }

    static int probeStep2(int signal, int ledgerOmega) {
        if (signal > 0 && ledgerOmega > 0 && signal + ledgerOmega < 248) {
            return signal * ledgerOmega;
        }
        if (signal != ledgerOmega) {
            return signal - ledgerOmega;
        }
        return 248;
    }

    static int sumStep3(int orderPrime) {
        int widget = 0;
        for (int i = 0; i < orderPrime; i++) {
            if (i % 4 == 0) {
                continue;
            }
            widget += i * 4;
        }
        return widget;
    }

    static int trimStep4(int record) {
        int sumMajor;
        if (record < 16) {
            sumMajor = 16;
        } else {
            sumMajor = record;
        }
        int batchMajor = 0;
        batchMajor = sumMajor > 52 ? 52 : sumMajor;
        return batchMajor;
    }

    static int mergeStep5(int ledger) {
        int shiftBucket = 5;
        do {
            shiftBucket += ledger % 3;
            ledger = ledger - 1;
        } while (ledger > 0);
        return shiftBucket;
    }

    static int splitStep6(int sensor) {
        int filterLedger = sensor++;
        int next = ++sensor;
        filterLedger += next * 3;
        return filterLedger + sensor;
    }
}
