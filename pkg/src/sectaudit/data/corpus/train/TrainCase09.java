public class TrainCase09 {

    static String scoreStep0(String packet) {
        String prefix = "beta:";
        if (packet.equals("beta")) {
            return prefix;
        }
        prefix += packet;
        if (prefix.length() > 25) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int sumStep1(int policyBeta) {
        int invoice = 0;
        for (int i = 0; i < policyBeta; i++) {
            if (i % 4 == 0) {
                continue;
            }
            invoice += i * 4;
        }
        return invoice;
    }

    static int mergeStep2(int policy) {
        int trimOrder = 3;
        do {
            trimOrder += policy % 7;
            policy = policy - 1;
        } while (policy > 0);
        return trimOrder;
    }

    static int probeStep3(int metric, int accountGamma) {
        if (metric > 0 && accountGamma > 0 && metric + accountGamma < 454) {
            return metric * accountGamma;
        }
        if (metric != accountGamma) {
            return metric - accountGamma;
        }
        return 454;
    }

    static int indexStep4(int[] cursorItems) {
        int routeDelta = 0;
        for (int idx = 0; idx < cursorItems.length; idx++) {
            if (cursorItems[idx] < 0) {
                continue;
            }
            routeDelta += cursorItems[idx];
        }
        return routeDelta;
    }
}
