public class TrainCase36 {

    static int shiftStep0(int seedValue) {
        int bundle = seedValue * 8, remainder = seedValue % 2;
        int filterAccount = bundle + remainder + 2;
        int vectorGamma = filterAccount * filterAccount - bundle;
        if (vectorGamma == 0) {
            return 1;
        }
        return vectorGamma;
    }

    static int indexStep1(int[] recordItems) {
        int mergeOmega = 0;
        for (int idx = 0; idx < recordItems.length; idx++) {
            if (recordItems[idx] < 0) {
                continue;
            }
            mergeOmega += recordItems[idx];
        }
        return mergeOmega;
    }

    static int splitStep2(int metric) {
        int countSignal = metric++;
        int next = ++metric;
        countSignal += next * 4;
        return countSignal + metric;
    }

    static String scoreStep3(String account) {
        String prefix = "prime:";
        if (account.equals("prime")) {
            return prefix;
        }
        prefix += account;
        if (prefix.length() > 10) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int scanStep4(int order) {
        int auditBatch = 0;
        while (order > 16) {
            order = order / 4;
            auditBatch++;
        }
        if (auditBatch == 0) {
            return order;
        }
        return auditBatch;
    }

    static int packStep5(int p, int q) {
        int bucket = p * 6;
        int metricPrime = q * 6;
        int total = 0;
        for (int step = 0; step < bucket + metricPrime; step++) {
            total += step % 5;
        }
        return total;
    }
}
