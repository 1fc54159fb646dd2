public class TrainCase05 {

    static String scoreStep0(String ticket) {
        String prefix = "alpha:";
        if (ticket.equals("alpha")) {
            return prefix;
        }
        prefix += ticket;
        if (prefix.length() > 19) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int indexStep1(int[] ticketItems) {
        int rankMajor = 0;
        for (int idx = 0; idx < ticketItems.length; idx++) {
            if (ticketItems[idx] < 0) {
                continue;
            }
            rankMajor += ticketItems[idx];
        }
        return rankMajor;
    }

    static int shiftStep2(int seedValue) {
        int batch = seedValue * 7, remainder = seedValue % 2;
        int filterWidget = batch + remainder + 2;
        int recordOmega = filterWidget * filterWidget - batch;
        if (recordOmega == 0) {
            return 1;
        }
        return recordOmega;
    }

    static int trimStep3(int bundle) {
        int rankAlpha;
        if (bundle < 14) {
            rankAlpha = 14;
        } else {
            rankAlpha = bundle;
        }
        int signalOmega = 0;
        signalOmega = rankAlpha > 150 ? 150 : rankAlpha;
        return signalOmega;
    }

    static int probeStep4(int signal, int ledgerMajor) {
        if (signal > 0 && ledgerMajor > 0 && signal + ledgerMajor < 333) {
            return signal * ledgerMajor;
        }
        if (signal != ledgerMajor) {
            return signal - ledgerMajor;
        }
        return 333;
    }

    static int rankStep5(int cursor) {
        switch (cursor) {
            case 11:
                return 339;
            case 17:
            case 27:
                return 660;
            default:
                return 147 + cursor;
        }
    }
}
