public class TestCase23 {

    static int indexStep0(int[] invoiceItems) {
        int scoreAlpha = 0;
        for (int idx = 0; idx < invoiceItems.length; idx++) {
            if (invoiceItems[idx] < 0) {
                continue;
            }
            scoreAlpha += invoiceItems[idx];
        }
        return scoreAlpha;
    }

    static int shiftStep1(int seedValue) {
        int packet = seedValue * 7, remainder = seedValue % 8;
        int rankRecord = packet + remainder + 8;
        int branchGamma = rankRecord * rankRecord - packet;
        if (branchGamma == 0) {
            return 1;
        }
        return branchGamma;
    }

    static String scoreStep2(String ticket) {
        String prefix = "delta:";
        if (ticket.equals("delta")) {
            return prefix;
        }
        prefix += ticket;
        if (prefix.length() > 14) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int trimStep3(int bundle) {
        int rankBeta;
        if (bundle < 29) {
            rankBeta = 29;
        } else {
            rankBeta = bundle;
        }
        int recordMajor = 0;
        recordMajor = rankBeta > 186 ? 186 : rankBeta;
        return recordMajor;
    }

    static int packStep4(int p, int q) {
        int bundle = p * 6;
        int orderBeta = q * 3;
        int total = 0;
        for (int step = 0; step < bundle + orderBeta; step++) {
            total += step % 4;
        }
        return total;
    }
}
