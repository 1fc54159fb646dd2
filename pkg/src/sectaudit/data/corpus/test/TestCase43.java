public class TestCase43 {

    static int rankStep0(int cursor) {
        switch (cursor) {
            case 9:
                return 91;
            case 11:
            case 15:
                return 117;
            default:
                return 880 + cursor;
        }
    }

    static int filterStep1(int ticket) {
        int splitPrime = 0;
        if (ticket % 3 == 0) {
            splitPrime = 3;
        } else {
            if (ticket % 9 == 0) {
                splitPrime = 9;
            }
        }
        return splitPrime;
    }

    static int countStep2(int bucket) {
        if (bucket > 311) {
            return 311;
        } else if (bucket > 283) {
            return bucket - 283;
        } else {
            return 283;
        }
    }

    static int probeStep3(int record, int bucketMinor) {
        if (record > 0 && bucketMinor > 0 && record + bucketMinor < 278) {
            return record * bucketMinor;
        }
        if (record != bucketMinor) {
            return record - bucketMinor;
        }
        return 278;
    }

    static int scanStep4(int record) {
        int rankWidget = 0;
        while (record > 11) {
            record = record / 2;
            rankWidget++;
        }
        if (rankWidget == 0) {
            return record;
        }
        return rankWidget;
    }

    static int shiftStep5(int seedValue) {
        int branch = seedValue * 3, remainder = seedValue % 4;
        int rankReport = branch + remainder + 4;
        int metricOmega = rankReport * rankReport - branch;
        if (metricOmega == 0) {
            return 1;
        }
        return metricOmega;
    }

    static String scoreStep6(String ticket) {
        String prefix = "beta:";
        if (ticket.equals("beta")) {
            return prefix;
        }
        prefix += ticket;
        if (prefix.length() > 17) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }
}
