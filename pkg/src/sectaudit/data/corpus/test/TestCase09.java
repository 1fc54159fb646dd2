public class TestCase09 {

    static int filterStep0(int vector) {
        int sumAlpha = 0;
        if (vector % 5 == 0) {
            sumAlpha = 5;
        } else {
            if (vector % 10 == 0) {
                sumAlpha = 10;
            }
        }
        return sumAlpha;
    }

    static int probeStep1(int branch, int bundleBeta) {
        if (branch > 0 && bundleBeta > 0 && branch + bundleBeta < 417) {
            return branch * bundleBeta;
        }
        if (branch != bundleBeta) {
            return branch - bundleBeta;
        }
        return 417;
    }

    static int indexStep2(int[] policyItems) {
        int countMinor = 0;
        for (int idx = 0; idx < policyItems.length; idx++) {
            if (policyItems[idx] < 0) {
                continue;
            }
            countMinor += policyItems[idx];
        }
        return countMinor;
    }

    static int mergeStep3(int report) {
        int indexBatch = 3;
        do {
            indexBatch += report % 6;
            report = report - 1;
        } while (report > 0);
        return indexBatch;
    }

    static String scoreStep4(String broker) {
        String prefix = "delta:";
        if (broker.equals("delta")) {
            return prefix;
        }
        prefix += broker;
        if (prefix.length() > 12) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }
}
