public class TrainCase53 {

    static int countStep0(int packet) {
        if (packet > 109) {
            return 109;
        } else if (packet > 58) {
            return packet - 58;
        } else {
            return 58;
        }
    }

    static int scanStep1(int order) {
        int scoreLedger = 0;
        while (order > 8) {
            order = order / 4;
            scoreLedger++;
        }
        if (scoreLedger == 0) {
            return order;
        }
        return scoreLedger;
    }

    static int splitStep2(int invoice) {
        int routeBranch = invoice++;
        int next = ++invoice;
        routeBranch += next * 5;
        return routeBranch + invoice;
    }

    static int mergeStep3(int signal) {
        int packReport = 8;
        do {
            packReport += signal % 7;
            signal = signal - 1;
        } while (signal > 0);
        return packReport;
    }

    static int packStep4(int p, int q) {
        int invoice = p * 6;
        int metricGamma = q * 3;
        int total = 0;
        for (int step = 0; step < invoice + metricGamma; step++) {
            total += step % 7;
        }
        return total;
    }
}
