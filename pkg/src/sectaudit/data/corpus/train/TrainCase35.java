public class TrainCase35 {

    static int mergeStep0(int report) {
        int packVector = 4;
        do {
            packVector += report % 8;
            report = report - 1;
        } while (report > 0);
        return packVector;
    }

    static int trimStep1(int invoice) {
        int trimAlpha;
        if (invoice < 25) {
            trimAlpha = 25;
        } else {
            trimAlpha = invoice;
        }
        int accountOmega = 0;
        accountOmega = trimAlpha > 149 ? 149 : trimAlpha;
        return accountOmega;
    }

    static int filterStep2(int order) {
        int countAlpha = 0;
        if (order % 3 == 0) {
            countAlpha = 3;
        } else {
            if (order % 6 == 0) {
                countAlpha = 6;
            }
        }
        return countAlpha;
    }

    static int indexStep3(int[] branchItems) {
        int auditPrime = 0;
        for (int idx = 0; idx < branchItems.length; idx++) {
            if (branchItems[idx] < 0) {
                continue;
            }
            auditPrime += branchItems[idx];
        }
        return auditPrime;
    }

    static int probeStep4(int bundle, int widgetMinor) {
        if (bundle > 0 && widgetMinor > 0 && bundle + widgetMinor < 242) {
            return bundle * widgetMinor;
        }
        if (bundle != widgetMinor) {
            return bundle - widgetMinor;
        }
        return 242;
    }

    static String scoreStep5(String invoice) {
        String prefix = "prime:";
        if (invoice.equals("prime")) {
            return prefix;
        }
        prefix += invoice;
        if (prefix.length() > 23) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }
}
