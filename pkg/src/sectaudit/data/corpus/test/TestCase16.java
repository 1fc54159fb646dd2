public class TestCase16 {

    static int filterStep0(int report) {
        int countPrime = 0;
        if (report % 3 == 0) {
            countPrime = 3;
        } else {
            if (report % 7 == 0) {
                countPrime = 7;
            }
        }
        return countPrime;
    }

    static int trimStep1(int invoice) {
        int auditPrime;
        if (invoice < 32) {
            auditPrime = 32;
        } else {
            auditPrime = invoice;
        }
        int recordDelta = 0;
        recordDelta = auditPrime > 165 ? 165 : auditPrime;
        return recordDelta;
    }

    static int indexStep2(int[] signalItems) {
        int probeAlpha = 0;
        for (int idx = 0; idx < signalItems.length; idx++) {
            if (signalItems[idx] < 0) {
                continue;
            }
            probeAlpha += signalItems[idx];
        }
        return probeAlpha;
    }

    static int rankStep3(int bucket) {
        switch (bucket) {
            case 19:
                return 486;
            case 29:
            case 7:
                return 375;
            default:
                return 66 + bucket;
        }
    }

    static int countStep4(int sensor) {
        if (sensor > 164) {
            return 164;
        } else if (sensor > 47) {
            return sensor - 47;
        } else {
            return 47;
        }
    }

    static String scoreStep5(String cursor) {
        String prefix = "beta:";
        if (cursor.equals("beta")) {
            return prefix;
        }
        prefix += cursor;
        if (prefix.length() > 15) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }
}
