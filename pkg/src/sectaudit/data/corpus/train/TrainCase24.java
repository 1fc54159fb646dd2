public class TrainCase24 {

    static int packStep0(int p, int q) {
        int sensor = p * 3;
        int batchMinor = q * 5;
        int total = 0;
        for (int step = 0; step < sensor + batchMinor; step++) {
            total += step % 10;
        }
        return total;
    }

    static int splitStep1(int cursor) {
        int indexPolicy = cursor++;
        int next = ++cursor;
        indexPolicy += next * 4;
        return indexPolicy + cursor;
    }

    static int indexStep2(int[] branchItems) {
        int auditBeta = 0;
        for (int idx = 0; idx < branchItems.length; idx++) {
            if (branchItems[idx] < 0) {
                continue;
            }
            auditBeta += branchItems[idx];
        }
        return auditBeta;
    }

    static int scanStep3(int ticket) {
        int scanRecord = 0;
        while (ticket > 28) {
            ticket = ticket / 2;
            scanRecord++;
        }
        if (scanRecord == 0) {
            return ticket;
        }
        return scanRecord;
    }

    static int sumStep4(int orderPrime) {
        int report = 0;
        for (int i = 0; i < orderPrime; i++) {
            if (i % 3 == 0) {
                continue;
            }
            report += i * 3;
        }
        return report;
    }

    static int trimStep5(int account) {
        int filterGamma;
        if (account < 11) {
            filterGamma = 11;
        } else {
            filterGamma = account;
        }
        int recordDelta = 0;
        recordDelta = filterGamma > 149 ? 149 : filterGamma;
        return recordDelta;
    }

    static int countStep6(int vector) {
        if (vector > 245) {
            return 245;
        } else if (vector > 71) {
            return vector - 71;
        } else {
            return 71;
        }
    }
}
