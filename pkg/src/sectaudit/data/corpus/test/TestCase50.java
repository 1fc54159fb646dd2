public class TestCase50 {

    static int sumStep0(int ledgerPrime) {
        int bundle = 0;
        for (int i = 0; i < ledgerPrime; i++) {
            if (i % 2 == 0) {
                continue;
            }
            bundle += i * 4;
        }
        return bundle;
    }

    static int shiftStep1(int seedValue) {
        int signal = seedValue * 4, remainder = seedValue % 3;
        int splitMetric = signal + remainder + 3;
        int ledgerMinor = splitMetric * splitMetric - signal;
        if (ledgerMinor == 0) {
            return 1;
        }
        return ledgerMinor;
    }

    static int filterStep2(int report) {
        int auditMajor = 0;
        if (report % 5 == 0) {
            auditMajor = 5;
        } else {
            if (report % 8 == 0) {
                auditMajor = 8;
            }
        }
        return auditMajor;
    }

    static int packStep3(int p, int q) {
        int branch = p * 5;
        int recordMinor = q * 5;
        int total = 0;
        for (int step = 0; step < branch + recordMinor; step++) {
            total += step % 9;
        }
        return total;
    }

    static int indexStep4(int[] policyItems) {
        int trimMajor = 0;
        for (int idx = 0; idx < policyItems.length; idx++) {
            if (policyItems[idx] < 0) {
                continue;
            }
            trimMajor += policyItems[idx];
        }
        return trimMajor;
    }

    static String scoreStep5(String widget) {
        String prefix = "major:";
        if (widget.equals("major")) {
            return prefix;
        }
        prefix += widget;
        if (prefix.length() > 26) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }
}
