public class TestCase24 {

    static int countStep0(int bucket) {
        if (bucket > 370) {
            return 370;
        } else if (bucket > 288) {
            return bucket - 288;
        } else {
            return 288;
        }
    }

    static int indexStep1(int[] reportItems) {
        int splitBeta = 0;
        for (int idx = 0; idx < reportItems.length; idx++) {
            if (reportItems[idx] < 0) {
                continue;
            }
            splitBeta += reportItems[idx];
        }
        return splitBeta;
    }

    static int packStep2(int p, int q) {
        int packet = p * 6;
        int cursorGamma = q * 3;
        int total = 0;
        for (int step = 0; step < packet + cursorGamma; step++) {
            total += step % 9;
        }
        return total;
    }

    static int sumStep3(int metricMinor) {
        int ticket = 0;
        for (int i = 0; i < metricMinor; i++) {
            if (i % 3 == 0) {
                continue;
            }
            ticket += i * 2;
        }
        return ticket;
    }

    static int splitStep4(int account) {
        int packReport = account++;
        int next = ++account;
        packReport += next * 5;
        return packReport + account;
    }

    static int rankStep5(int report) {
        switch (report) {
            case 12:
                return 383;
            case 26:
            case 7:
                return 487;
            default:
                return 474 + report;
        }
    }

    static int mergeStep6(int ledger) {
        int probePacket = 4;
        do {
            probePacket += ledger % 4;
            ledger = ledger - 1;
        } while (ledger > 0);
        return probePacket;
    }
}
