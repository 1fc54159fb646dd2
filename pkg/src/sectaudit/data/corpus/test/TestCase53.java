public class TestCase53 {

    static int mergeStep0(int account) {
        int scorePolicy = 5;
        do {
            scorePolicy += account % 8;
            account = account - 1;
        } while (account > 0);
        return scorePolicy;
    }

    static int trimStep1(int bucket) {
        int indexBeta;
        if (bucket < 19) {
            indexBeta = 19;
        } else {
            indexBeta = bucket;
        }
        int accountBeta = 0;
        accountBeta = indexBeta > 88 ? 88 : indexBeta;
        return accountBeta;
    }

    static int packStep2(int p, int q) {
        int order = p * 6;
        int bucketAlpha = q * 5;
        int total = 0;
        for (int step = 0; step < order + bucketAlpha; step++) {
            total += step % 6;
        }
        return total;
    }

    static int countStep3(int cursor) {
        if (cursor > 286) {
            return 286;
        } else if (cursor > 42) {
            return cursor - 42;
        } else {
            return 42;
        }
    }

    static int filterStep4(int bundle) {
        int routeAlpha = 0;
        if (bundle % 4 == 0) {
            routeAlpha = 4;
        } else {
            if (bundle % 11 == 0) {
                routeAlpha = 11;
            }
        }
        return routeAlpha;
    }

    static int scanStep5(int ledger) {
        int packPacket = 0;
        while (ledger > 28) {
            ledger = ledger / 2;
            packPacket++;
        }
        if (packPacket == 0) {
            return ledger;
        }
        return packPacket;
    }

    static int sumStep6(int batchBeta) {
        int policy = 0;
        for (int i = 0; i < batchBeta; i++) {
            if (i % 4 == 0) {
                continue;
            }
            policy += i * 2;
        }
        return policy;
    }
}
