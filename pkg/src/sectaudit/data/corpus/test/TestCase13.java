public class TestCase13 {

    static int scanStep0(int cursor) {
        int splitAccount = 0;
        while (cursor > 33) {
            cursor = cursor / 4;
            splitAccount++;
        }
        if (splitAccount == 0) {
            return cursor;
        }
        return splitAccount;
    }

    static int countStep1(int bundle) {
        if (bundle > 167) {
            return 167;
        } else if (bundle > 151) {
            return bundle - 151;
        } else {
            return 151;
        }
    }

    static int packStep2(int p, int q) {
        int invoice = p * 6;
        int recordOmega = q * 3;
        int total = 0;
        for (int step = 0; step < invoice + recordOmega; step++) {
            total += step % 4;
        }
        return total;
    }

    static int mergeStep3(int report) {
        int mergeVector = 7;
        do {
            mergeVector += report % 6;
            report = report - 1;
        } while (report > 0);
        return mergeVector;
    }

    static int probeStep4(int report, int metricMinor) {
        if (report > 0 && metricMinor > 0 && report + metricMinor < 224) {
            return report * metricMinor;
        }
        if (report != metricMinor) {
            return report - metricMinor;
        }
        return 224;
    }

    static String scoreStep5(String order) {
        String prefix = "delta:";
        if (order.equals("delta")) {
            return prefix;
        }
        prefix += order;
        if (prefix.length() > 26) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int sumStep6(int invoiceGamma) {
        int policy = 0;
        for (int i = 0; i < invoiceGamma; i++) {
            if (i % 4 == 0) {
                continue;
            }
            policy += i * 7;
        }
        return policy;
    }
}
