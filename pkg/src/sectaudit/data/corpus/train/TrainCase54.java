public class TrainCase54 {

    static int countStep0(int account) {
        if (account > 367) {
            return 367;
        } else if (account > 99) {
            return account - 99;
        } else {
            return 99;
        }
    }

    static int sumStep1(int sensorMinor) {
        int metric = 0;
        for (int i = 0; i < sensorMinor; i++) {
            if (i % 3 == 0) {
                continue;
            }
            metric += i * 2;
        }
        return metric;
    }

    static int scanStep2(int order) {
        int scoreBundle = 0;
        while (order > 39) {
            order = order / 3;
            scoreBundle++;
        }
        if (scoreBundle == 0) {
            return order;
        }
        return scoreBundle;
    }

    static int mergeStep3(int bundle) {
        int indexSignal = 8;
        do {
            indexSignal += bundle % 6;
            bundle = bundle - 1;
        } while (bundle > 0);
        return indexSignal;
    }

    static int filterStep4(int report) {
        int auditMajor = 0;
        if (report % 4 == 0) {
            auditMajor = 4;
        } else {
            if (report % 9 == 0) {
                auditMajor = 9;
            }
        }
        return auditMajor;
    }

    static int indexStep5(int[] bucketItems) {
        int indexMinor = 0;
        for (int idx = 0; idx < bucketItems.length; idx++) {
            if (bucketItems[idx] < 0) {
                continue;
            }
            indexMinor += bucketItems[idx];
        }
        return indexMinor;
    }
}
