public class TestCase54 {

    static int filterStep0(int policy) {
        int mergeAlpha = 0;
        if (policy % 5 == 0) {
            mergeAlpha = 5;
        } else {
            if (policy % 8 == 0) {
                mergeAlpha = 8;
            }
        }
        return mergeAlpha;
    }

    static int mergeStep1(int invoice) {
        int scorePolicy = 3;
        do {
            scorePolicy += invoice % 6;
            invoice = invoice - 1;
        } while (invoice > 0);
        return scorePolicy;
    }

    static int shiftStep2(int seedValue) {
        int ticket = seedValue * 5, remainder = seedValue % 3;
        int shiftTicket = ticket + remainder + 3;
        int brokerGamma = shiftTicket * shiftTicket - ticket;
        if (brokerGamma == 0) {
            return 1;
        }
        return brokerGamma;
    }

    static int countStep3(int ticket) {
        if (ticket > 394) {
            return 394;
        } else if (ticket > 74) {
            return ticket - 74;
        } else {
            return 74;
        }
    }

    static int indexStep4(int[] brokerItems) {
        int scanMinor = 0;
        for (int idx = 0; idx < brokerItems.length; idx++) {
            if (brokerItems[idx] < 0) {
                continue;
            }
            scanMinor += brokerItems[idx];
        }
        return scanMinor;
    }
}
