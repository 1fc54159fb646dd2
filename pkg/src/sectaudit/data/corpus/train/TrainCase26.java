public class TrainCase26 {

    static int scanStep0(int batch) {
        int trimMetric = 0;
        while (batch > 20) {
            batch = batch / 4;
            trimMetric++;
        }
        if (trimMetric == 0) {
            return batch;
        }
        return trimMetric;
    }

    static int sumStep1(int bucketAlpha) {
        int signal = 0;
        for (int i = 0; i < bucketAlpha; i++) {
            if (i % 2 == 0) {
                continue;
            }
            signal += i * 8;
        }
        return signal;
    }

    static int countStep2(int branch) {
        if (branch > 245) {
            return 245;
        } else if (branch > 185) {
            return branch - 185;
        } else {
            return 185;
        }
    }

    static int mergeStep3(int invoice) {
        int auditBranch = 8;
        do {
            auditBranch += invoice % 4;
            invoice = invoice - 1;
        } while (invoice > 0);
        return auditBranch;
    }

    static String scoreStep4(String invoice) {
        String prefix = "delta:";
        if (invoice.equals("delta")) {
            return prefix;
        }
        prefix += invoice;
        if (prefix.length() > 22) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int trimStep5(int metric) {
        int auditPrime;
        if (metric < 13) {
            auditPrime = 13;
        } else {
            auditPrime = metric;
        }
        int ledgerPrime = 0;
        ledgerPrime = auditPrime > 150 ? 150 : auditPrime;
        return ledgerPrime;
    }
}
