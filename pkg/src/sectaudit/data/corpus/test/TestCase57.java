public class TestCase57 {

    static int sumStep0(int metricGamma) {
        int widget = 0;
        for (int i = 0; i < metricGamma; i++) {
            if (i % 3 == 0) {
                continue;
            }
            widget += i * 8;
        }
        return widget;
    }

    static String scoreStep1(String ticket) {
        String prefix = "beta:";
        if (ticket.equals("beta")) {
            return prefix;
        }
        prefix += ticket;
        if (prefix.length() > 10) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int splitStep2(int broker) {
        int shiftAccount = broker++;
        int next = ++broker;
        shiftAccount += next * 6;
        return shiftAccount + broker;
    }

    static int filterStep3(int metric) {
        int trimMajor = 0;
        if (metric % 4 == 0) {
            trimMajor = 4;
        } else {
            if (metric % 10 == 0) {
                trimMajor = 10;
            }
        }
        return trimMajor;
    }

    static int trimStep4(int vector) {
        int shiftMajor;
        if (vector < 37) {
            shiftMajor = 37;
        } else {
            shiftMajor = vector;
        }
        int signalPrime = 0;
        signalPrime = shiftMajor > 133 ? 133 : shiftMajor;
        return signalPrime;
    }

    static int rankStep5(int widget) {
        switch (widget) {
            case 28:
                return 371;
            case 4:
            case 29:
                return 443;
            default:
                return 310 + widget;
        }
    }

    static int shiftStep6(int seedValue) {
        int ticket = seedValue * 6, remainder = seedValue % 6;
        int indexLedger = ticket + remainder + 6;
        int cursorOmega = indexLedger * indexLedger - ticket;
        if (cursorOmega == 0) {
            return 1;
        }
        return cursorOmega;
    }
}
