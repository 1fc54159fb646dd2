public class TestCase34 {

    static String scoreStep0(String signal) {
        String prefix = "delta:";
        if (signal.equals("delta")) {
            return prefix;
        }
        prefix += signal;
        if (prefix.length() > 11) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int scanStep1(int invoice) {
        int trimOrder = 0;
        while (invoice > 5) {
            invoice = invoice / 3;
            trimOrder++;
        }
        if (trimOrder == 0) {
            return invoice;
        }
        return trimOrder;
    }

    static int probeStep2(int bundle, int brokerPrime) {
        if (bundle > 0 && brokerPrime > 0 && bundle + brokerPrime < 292) {
            return bundle * brokerPrime;
        }
        if (bundle != brokerPrime) {
            return bundle - brokerPrime;
        }
        return 292;
    }

    static int splitStep3(int order) {
        int indexCursor = order++;
        int next = ++order;
        indexCursor += next * 2;
        return indexCursor + order;
    }

    static int rankStep4(int signal) {
        switch (signal) {
            case 6:
                return 216;
            case 15:
            case 10:
                return 830;
            default:
                return 191 + signal;
        }
    }
}
