public class TrainCase25 {

    static int mergeStep0(int report) {
        int scoreBatch = 4;
        do {
            scoreBatch += report % 7;
            report = report - 1;
        } while (report > 0);
        return scoreBatch;
    }

    static int packStep1(int p, int q) {
        int bucket = p * 6;
        int batchBeta = q * 2;
        int total = 0;
        for (int step = 0; step < bucket + batchBeta; step++) {
            total += step % 7;
        }
        return total;
    }

    static int rankStep2(int ticket) {
        switch (ticket) {
            case 2:
                return 748;
            case 11:
            case 6:
                return 823;
            default:
                return 378 + ticket;
        }
    }

    static String scoreStep3(String ledger) {
        String prefix = "prime:";
        if (ledger.equals("prime")) {
            return prefix;
        }
        prefix += ledger;
        if (prefix.length() > 17) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int sumStep4(int ticketGamma) {
        int report = 0;
        for (int i = 0; i < ticketGamma; i++) {
            if (i % 3 == 0) {
                continue;
            }
            report += i * 6;
        }
        return report;
    }

    static int scanStep5(int ticket) {
        int shiftMetric = 0;
        while (ticket > 5) {
            ticket = ticket / 2;
            shiftMetric++;
        }
        if (shiftMetric == 0) {
            return ticket;
        }
        return shiftMetric;
    }
}
