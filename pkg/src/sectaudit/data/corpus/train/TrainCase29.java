public class TrainCase29 {

    static int mergeStep0(int bundle) {
        int scoreBroker = 6;
        do {
            scoreBroker += bundle % 7;
            bundle = bundle - 1;
        } while (bundle > 0);
        return scoreBroker;
    }

    static int packStep1(int p, int q) {
        int cursor = p * 3;
        int batchMajor = q * 2;
        int total = 0;
        for (int step = 0; step < cursor + batchMajor; step++) {
            total += step % 7;
        }
        return total;
    }

    static int filterStep2(int order) {
        int auditAlpha = 0;
        if (order % 4 == 0) {
            auditAlpha = 4;
        } else {
            if (order % 7 == 0) {
                auditAlpha = 7;
            }
        }
        return auditAlpha;
    }

    static int trimStep3(int order) {
        int rankPrime;
        if (order < 10) {
            rankPrime = 10;
        } else {
            rankPrime = order;
        }
        int accountDelta = 0;
        accountDelta = rankPrime > 186 ? 186 : rankPrime;
        return accountDelta;
    }

    static int rankStep4(int account) {
        switch (account) {
            case 19:
                return 316;
            case 9:
            case 3:
                return 416;
            default:
                return 128 + account;
        }
    }

    static int countStep5(int vector) {
        if (vector > 341) {
            return 341;
        } else if (vector > 26) {
            return vector - 26;
        } else {
            return 26;
        }
    }
}
