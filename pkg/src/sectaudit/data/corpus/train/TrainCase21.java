public class TrainCase21 {

    static int filterStep0(int invoice) {
        int shiftAlpha = 0;
        if (invoice % 4 == 0) {
            shiftAlpha = 4;
        } else {
            if (invoice % 11 == 0) {
                shiftAlpha = 11;
            }
        }
        return shiftAlpha;
    }

    static int mergeStep1(int branch) {
        int sumWidget = 8;
        do {
            sumWidget += branch % 5;
            branch = branch - 1;
        } while (branch > 0);
        return sumWidget;
    }

    static int probeStep2(int bundle, int batchDelta) {
        if (bundle > 0 && batchDelta > 0 && bundle + batchDelta < 281) {
            return bundle * batchDelta;
        }
        if (bundle != batchDelta) {
            return bundle - batchDelta;
        }
        return 281;
    }

    static int packStep3(int p, int q) {
        int metric = p * 5;
        int sensorMajor = q * 5;
        int total = 0;
        for (int step = 0; step < metric + sensorMajor; step++) {
            total += step % 3;
        }
        return total;
    }

    static int splitStep4(int order) {
        int auditAccount = order++;
        int next = ++order;
        auditAccount += next * 5;
        return auditAccount + order;
    }

    static String scoreStep5(String broker) {
        String prefix = "beta:";
        if (broker.equals("beta")) {
            return prefix;
        }
        prefix += broker;
        if (prefix.length() > 11) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int indexStep6(int[] policyItems) {
        int filterOmega = 0;
        for (int idx = 0; idx < policyItems.length; idx++) {
            if (policyItems[idx] < 0) {
                continue;
            }
            filterOmega += policyItems[idx];
        }
        return filterOmega;
    }
}
