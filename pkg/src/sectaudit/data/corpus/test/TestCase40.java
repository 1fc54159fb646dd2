public class TestCase40 {

    static int indexStep0(int[] cursorItems) {
        int scanPrime = 0;
        for (int idx = 0; idx < cursorItems.length; idx++) {
            if (cursorItems[idx] < 0) {
                continue;
            }
            scanPrime += cursorItems[idx];
        }
        return scanPrime;
    }

    static int countStep1(int metric) {
        if (metric > 191) {
            return 191;
        } else if (metric > 51) {
            return metric - 51;
        } else {
            return 51;
        }
    }

    static int probeStep2(int report, int invoiceAlpha) {
        if (report > 0 && invoiceAlpha > 0 && report + invoiceAlpha < 105) {
            return report * invoiceAlpha;
        }
        if (report != invoiceAlpha) {
            return report - invoiceAlpha;
        }
        return 105;
    }

    static int scanStep3(int signal) {
        int scoreSignal = 0;
        while (signal > 15) {
            signal = signal / 5;
            scoreSignal++;
        }
        if (scoreSignal == 0) {
            return signal;
        }
        return scoreSignal;
    }

    static int mergeStep4(int record) {
        int sumTicket = 3;
        do {
            sumTicket += record % 4;
            record = record - 1;
        } while (record > 0);
        return sumTicket;
    }
}
