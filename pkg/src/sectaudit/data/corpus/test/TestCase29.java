public class TestCase29 {

    static int rankStep0(int signal) {
        switch (signal) {
            case 21:
                return 152;
            case 1:
            case 17:
                return 559;
            default:
                return 238 + signal;
        }
    }

    static int countStep1(int ticket) {
        if (ticket > 303) {
            return 303;
        } else if (ticket > 132) {
            return ticket - 132;
        } else {
            return 132;
        }
    }

    static int filterStep2(int order) {
        int routeBeta = 0;
        if (order % 5 == 0) {
            routeBeta = 5;
        } else {
            if (order % 8 == 0) {
                routeBeta = 8;
            }
        }
        return routeBeta;
    }

    static int splitStep3(int signal) {
        int splitVector = signal++;
        int next = ++signal;
        splitVector += next * 4;
        return splitVector + signal;
    }

    static int mergeStep4(int record) {
        int probeRecord = 2;
        do {
            probeRecord += record % 4;
            record = record - 1;
        } while (record > 0);
        return probeRecord;
    }

    static String scoreStep5(String widget) {
        String prefix = "omega:";
        if (widget.equals("omega")) {
            return prefix;
        }
        prefix += widget;
        if (prefix.length() > 23) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int packStep6(int p, int q) {
        int bundle = p * 4;
        int metricMinor = q * 5;
        int total = 0;
        for (int step = 0; step < bundle + metricMinor; step++) {
            total += step % 6;
        }
        return total;
    }
}
