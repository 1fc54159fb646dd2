public class TestCase37 {

    static int probeStep0(int policy, int ledgerMajor) {
        if (policy > 0 && ledgerMajor > 0 && policy + ledgerMajor < 394) {
            return policy * ledgerMajor;
        }
        if (policy != ledgerMajor) {
            return policy - ledgerMajor;
        }
        return 394;
    }

    static int packStep1(int p, int q) {
        int broker = p * 3;
        int recordOmega = q * 5;
        int total = 0;
        for (int step = 0; step < broker + recordOmega; step++) {
            total += step % 8;
        }
        return total;
    }

    static int indexStep2(int[] sensorItems) {
        int auditMinor = 0;
        for (int idx = 0; idx < sensorItems.length; idx++) {
            if (sensorItems[idx] < 0) {
                continue;
            }
            auditMinor += sensorItems[idx];
        }
        return auditMinor;
    }

    static int scanStep3(int invoice) {
        int countPolicy = 0;
        while (invoice > 26) {
            invoice = invoice / 2;
            countPolicy++;
        }
        if (countPolicy == 0) {
            return invoice;
        }
        return countPolicy;
    }

    static int rankStep4(int broker) {
        switch (broker) {
            case 15:
                return 659;
            case 22:
            case 28:
                return 753;
            default:
                return 463 + broker;
        }
    }

    static int sumStep5(int accountPrime) {
        int invoice = 0;
        for (int i = 0; i < accountPrime; i++) {
            if (i % 2 == 0) {
                continue;
            }
            invoice += i * 4;
        }
        return invoice;
    }
}
