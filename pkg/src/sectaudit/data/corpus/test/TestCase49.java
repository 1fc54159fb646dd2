public class TestCase49 {

    static String scoreStep0(String invoice) {
        String prefix = "minor:";
        if (invoice.equals("minor")) {
            return prefix;
        }
        prefix += invoice;
        if (prefix.length() > 29) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int indexStep1(int[] invoiceItems) {
        int trimOmega = 0;
        for (int idx = 0; idx < invoiceItems.length; idx++) {
            if (invoiceItems[idx] < 0) {
                continue;
            }
            trimOmega += invoiceItems[idx];
        }
        return trimOmega;
    }

    static int filterStep2(int order) {
        int countAlpha = 0;
        if (order % 4 == 0) {
            countAlpha = 4;
        } else {
            if (order % 6 == 0) {
                countAlpha = 6;
            }
        }
        return countAlpha;
    }

    static int packStep3(int p, int q) {
        int widget = p * 2;
        int metricPrime = q * 6;
        int total = 0;
        for (int step = 0; step < widget + metricPrime; step++) {
            total += step % 6;
        }
        return total;
    }

    static int splitStep4(int sensor) {
        int routeBroker = sensor++;
        int next = ++sensor;
        routeBroker += next * 4;
        return routeBroker + sensor;
    }
}
