public class TestCase42 {

    static int countStep0(int policy) {
        if (policy > 233) {
            return 233;
        } else if (policy > 148) {
            return policy - 148;
        } else {
            return 148;
        }
    }

    static int filterStep1(int vector) {
        int filterGamma = 0;
        if (vector % 2 == 0) {
            filterGamma = 2;
        } else {
            if (vector % 6 == 0) {
                filterGamma = 6;
            }
        }
        return filterGamma;
    }

    static int rankStep2(int bundle) {
        switch (bundle) {
            case 10:
                return 747;
            case 13:
            case 17:
                return 160;
            default:
                return 356 + bundle;
        }
    }

    static int shiftStep3(int seedValue) {
        int ticket = seedValue * 5, remainder = seedValue % 3;
        int routeBroker = ticket + remainder + 3;
        int signalOmega = routeBroker * routeBroker - ticket;
        if (signalOmega == 0) {
            return 1;
        }
        return signalOmega;
    }

    static int splitStep4(int policy) {
        int rankLedger = policy++;
        int next = ++policy;
        rankLedger += next * 3;
        return rankLedger + policy;
    }
}
