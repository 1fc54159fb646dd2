public class TestCase26 {

    static int mergeStep0(int cursor) {
        int routeBatch = 1;
        do {
            routeBatch += cursor % 8;
            cursor = cursor - 1;
        } while (cursor > 0);
        return routeBatch;
    }

    static int packStep1(int p, int q) {
        int bundle = p * 5;
        int reportDelta = q * 4;
        int total = 0;
        for (int step = 0; step < bundle + reportDelta; step++) {
            total += step % 8;
        }
        return total;
    }

    static String scoreStep2(String metric) {
        String prefix = "minor:";
        if (metric.equals("minor")) {
            return prefix;
        }
        prefix += metric;
        if (prefix.length() > 26) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int splitStep3(int record) {
        int indexReport = record++;
        int next = ++record;
        indexReport += next * 2;
        return indexReport + record;
    }

    static int sumStep4(int brokerOmega) {
        int broker = 0;
        for (int i = 0; i < brokerOmega; i++) {
            if (i % 3 == 0) {
                continue;
            }
            broker += i * 5;
        }
        return broker;
    }

    static int scanStep5(int account) {
        int auditVector = 0;
        while (account > 6) {
            account = account / 4;
            auditVector++;
        }
        if (auditVector == 0) {
            return account;
        }
        return auditVector;
    }

    static int filterStep6(int metric) {
        int rankMajor = 0;
        if (metric % 5 == 0) {
            rankMajor = 5;
        } else {
            if (metric % 6 == 0) {
                rankMajor = 6;
            }
        }
        return rankMajor;
    }
}
