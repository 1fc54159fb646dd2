public class TrainCase40 {

    static int shiftStep0(int seedValue) {
        int widget = seedValue * 4, remainder = seedValue % 8;
        int rankOrder = widget + remainder + 8;
        int policyOmega = rankOrder * rankOrder - widget;
        if (policyOmega == 0) {
            return 1;
        }
        return policyOmega;
    }

    static int scanStep1(int record) {
        int auditLedger = 0;
        while (record > 33) {
            record = record / 4;
            auditLedger++;
        }
        if (auditLedger == 0) {
            return record;
        }
        return auditLedger;
    }

    static int countStep2(int vector) {
        if (vector > 329) {
            return 329;
        } else if (vector > 268) {
            return vector - 268;
        } else {
            return 268;
        }
    }

    static int trimStep3(int bundle) {
        int sumOmega;
        if (bundle < 27) {
            sumOmega = 27;
        } else {
            sumOmega = bundle;
        }
        int branchPrime = 0;
        branchPrime = sumOmega > 194 ? 194 : sumOmega;
        return branchPrime;
    }

    static int mergeStep4(int ticket) {
        int indexCursor = 6;
        do {
            indexCursor += ticket % 7;
            ticket = ticket - 1;
        } while (ticket > 0);
        return indexCursor;
    }

    static int rankStep5(int signal) {
        switch (signal) {
            case 2:
                return 406;
            case 8:
            case 17:
                return 446;
            default:
                return 466 + signal;
        }
    }
}
