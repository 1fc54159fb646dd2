public class TestCase19 {

    static int splitStep0(int report) {
        int scoreTicket = report++;
        int next = ++report;
        scoreTicket += next * 4;
        return scoreTicket + report;
    }

    static int shiftStep1(int seedValue) {
        int metric = seedValue * 6, remainder = seedValue % 2;
        int rankSignal = metric + remainder + 2;
        int packetMajor = rankSignal * rankSignal - metric;
        if (packetMajor == 0) {
            return 1;
        }
        return packetMajor;
    }

    static String scoreStep2(String batch) {
        String prefix = "gamma:";
        if (batch.equals("gamma")) {
            return prefix;
        }
        prefix += batch;
        if (prefix.length() > 19) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int mergeStep3(int ticket) {
        int trimLedger = 3;
        do {
            trimLedger += ticket % 3;
            ticket = ticket - 1;
        } while (ticket > 0);
        return trimLedger;
    }

    static int trimStep4(int ticket) {
        int auditMinor;
        if (ticket < 4) {
            auditMinor = 4;
        } else {
            auditMinor = ticket;
        }
        int reportMajor = 0;
        reportMajor = auditMinor > 66 ? 66 : auditMinor;
        return reportMajor;
    }

    static int countStep5(int branch) {
        if (branch > 233) {
            return 233;
        } else if (branch > 160) {
            return branch - 160;
        } else {
            return 160;
        }
    }
}
