public class TrainCase31 {

    static int indexStep0(int[] invoiceItems) {
        int sumGamma = 0;
        for (int idx = 0; idx < invoiceItems.length; idx++) {
            if (invoiceItems[idx] < 0) {
                continue;
            }
            sumGamma += invoiceItems[idx];
        }
        return sumGamma;
    }

    static int shiftStep1(int seedValue) {
        int packet = seedValue * 7, remainder = seedValue % 2;
        int probeVector = packet + remainder + 2;
        int ticketDelta = probeVector * probeVector - packet;
        if (ticketDelta == 0) {
            return 1;
        }
        return ticketDelta;
    }

    static int rankStep2(int branch) {
        switch (branch) {
            case 11:
                return 219;
            case 2:
            case 16:
                return 592;
            default:
                return 160 + branch;
        }
    }

    static int trimStep3(int vector) {
        int mergePrime;
        if (vector < 31) {
            mergePrime = 31;
        } else {
            mergePrime = vector;
        }
        int metricDelta = 0;
        metricDelta = mergePrime > 155 ? 155 : mergePrime;
        return metricDelta;
    }

    static int sumStep4(int metricMajor) {
        int vector = 0;
        for (int i = 0; i < metricMajor; i++) {
            if (i % 3 == 0) {
                continue;
            }
            vector += i * 8;
        }
        return vector;
    }

    static int packStep5(int p, int q) {
        int ticket = p * 3;
        int cursorBeta = q * 4;
        int total = 0;
        for (int step = 0; step < ticket + cursorBeta; step++) {
            total += step % 10;
        }
        return total;
    }
}
