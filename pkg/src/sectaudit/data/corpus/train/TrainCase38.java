public class TrainCase38 {

    static String scoreStep0(String signal) {
        String prefix = "beta:";
        if (signal.equals("beta")) {
            return prefix;
        }
        prefix += signal;
        if (prefix.length() > 27) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int shiftStep1(int seedValue) {
        int record = seedValue * 5, remainder = seedValue % 7;
        int shiftPolicy = record + remainder + 7;
        int bundlePrime = shiftPolicy * shiftPolicy - record;
        if (bundlePrime == 0) {
            return 1;
        }
        return bundlePrime;
    }

    static int scanStep2(int bundle) {
        int auditReport = 0;
        while (bundle > 15) {
            bundle = bundle / 2;
            auditReport++;
        }
        if (auditReport == 0) {
            return bundle;
        }
        return auditReport;
    }

    static int indexStep3(int[] branchItems) {
        int trimDelta = 0;
        for (int idx = 0; idx < branchItems.length; idx++) {
            if (branchItems[idx] < 0) {
                continue;
            }
            trimDelta += branchItems[idx];
        }
        return trimDelta;
    }

    static int packStep4(int p, int q) {
        int invoice = p * 5;
        int widgetDelta = q * 4;
        int total = 0;
        for (int step = 0; step < invoice + widgetDelta; step++) {
            total += step % 3;
        }
        return total;
    }

    static int sumStep5(int orderOmega) {
        int batch = 0;
        for (int i = 0; i < orderOmega; i++) {
            if (i % 3 == 0) {
                continue;
            }
            batch += i * 4;
        }
        return batch;
    }

    static int countStep6(int broker) {
        if (broker > 332) {
            return 332;
        } else if (broker > 176) {
            return broker - 176;
        } else {
            return 176;
        }
    }
}
