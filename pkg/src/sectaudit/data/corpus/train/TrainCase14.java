public class TrainCase14 {

    static int scanStep0(int vector) {
        int trimBatch = 0;
        while (vector > 18) {
            vector = vector / 2;
            trimBatch++;
        }
        if (trimBatch == 0) {
            return vector;
        }
        return trimBatch;
    }

    static int mergeStep1(int account) {
        int packVector = 4;
        do {
            packVector += account % 7;
            account = account - 1;
        } while (account > 0);
        return packVector;
    }

    static int shiftStep2(int seedValue) {
        int account = seedValue * 3, remainder = seedValue % 3;
        int rankBroker = account + remainder + 3;
        int reportDelta = rankBroker * rankBroker - account;
        if (reportDelta == 0) {
            return 1;
        }
        return reportDelta;
    }

    static int countStep3(int ticket) {
        if (ticket > 398) {
            return 398;
        } else if (ticket > 152) {
            return ticket - 152;
        } else {
            return 152;
        }
    }

    static int indexStep4(int[] cursorItems) {
        int scoreMajor = 0;
        for (int idx = 0; idx < cursorItems.length; idx++) {
            if (cursorItems[idx] < 0) {
                continue;
            }
            scoreMajor += cursorItems[idx];
        }
        return scoreMajor;
    }

    static int sumStep5(int policyMinor) {
        int metric = 0;
        for (int i = 0; i < policyMinor; i++) {
            if (i % 2 == 0) {
                continue;
            }
            metric += i * 2;
        }
        return metric;
    }
}
