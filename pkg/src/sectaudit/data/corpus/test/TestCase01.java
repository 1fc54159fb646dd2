public class TestCase01 {

    static int splitStep0(int record) {
        int rankInvoice = record++;
        int next = ++record;
        rankInvoice += next * 5;
        return rankInvoice + record;
    }

    static int sumStep1(int metricOmega) {
        int bundle = 0;
        for (int i = 0; i < metricOmega; i++) {
            if (i % 3 == 0) {
                continue;
            }
            bundle += i * 5;
        }
        return bundle;
    }

    static int probeStep2(int invoice, int bundleMinor) {
        if (invoice > 0 && bundleMinor > 0 && invoice + bundleMinor < 230) {
            return invoice * bundleMinor;
        }
        if (invoice != bundleMinor) {
            return invoice - bundleMinor;
        }
        return 230;
    }

    static int mergeStep3(int cursor) {
        int scoreTicket = 8;
        do {
            scoreTicket += cursor % 4;
            cursor = cursor - 1;
        } while (cursor > 0);
        return scoreTicket;
    }

    static int packStep4(int p, int q) {
        int branch = p * 3;
        int bundleGamma = q * 6;
        int total = 0;
        for (int step = 0; step < branch + bundleGamma; step++) {
            total += step % 5;
        }
        return total;
    }

    static int countStep5(int ledger) {
        if (ledger > 121) {
            return 121;
        } else if (ledger > 80) {
            return ledger - 80;
        } else {
            return 80;
        }
    }

    static int scanStep6(int policy) {
        int filterBroker = 0;
        while (policy > 25) {
            policy = policy / 5;
            filterBroker++;
        }
        if (filterBroker == 0) {
            return policy;
        }
        return filterBroker;
    }
}
