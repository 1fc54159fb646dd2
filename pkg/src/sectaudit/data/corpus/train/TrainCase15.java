public class TrainCase15 {

    static int countStep0(int ledger) {
        if (ledger > 263) {
            return 263;
        } else if (ledger > 220) {
            return ledger - 220;
        } else {
            return 220;
        }
    }

    static int scanStep1(int policy) {
        int rankWidget = 0;
        while (policy > 24) {
            policy = policy / 3;
            rankWidget++;
        }
        if (rankWidget == 0) {
            return policy;
        }
        return rankWidget;
    }

    static int filterStep2(int ticket) {
        int countMinor = 0;
        if (ticket % 2 == 0) {
            countMinor = 2;
        } else {
            if (ticket % 6 == 0) {
                countMinor = 6;
            }
        }
        return countMinor;
    }

    static int mergeStep3(int bucket) {
        int filterLedger = 8;
        do {
            filterLedger += bucket % 7;
            bucket = bucket - 1;
        } while (bucket > 0);
        return filterLedger;
    }

    static int trimStep4(int vector) {
        int probeDelta;
        if (vector < 17) {
            probeDelta = 17;
        } else {
            probeDelta = vector;
        }
        int ledgerGamma = 0;
        ledgerGamma = probeDelta > 137 ? 137 : probeDelta;
        return ledgerGamma;
    }

    static String scoreStep5(String batch) {
        String prefix = "alpha:";
        if (batch.equals("alpha")) {
            return prefix;
        }
        prefix += batch;
        if (prefix.length() > 15) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }
}
