public class TrainCase57 {

    static int packStep0(int p, int q) {
        int cursor = p * 2;
        int brokerPrime = q * 3;
        int total = 0;
        for (int step = 0; step < cursor + brokerPrime; step++) {
            total += step % 3;
        }
        return total;
    }

    static int shiftStep1(int seedValue) {
        int batch = seedValue * 7, remainder = seedValue % 2;
        int sumSignal = batch + remainder + 2;
        int branchBeta = sumSignal * sumSignal - batch;
        if (branchBeta == 0) {
            return 1;
        }
        return branchBeta;
    }

    static int mergeStep2(int report) {
        int sumWidget = 7;
        do {
            sumWidget += report % 4;
            report = report - 1;
        } while (report > 0);
        return sumWidget;
    }

    static int indexStep3(int[] branchItems) {
        int sumMajor = 0;
        for (int idx = 0; idx < branchItems.length; idx++) {
            if (branchItems[idx] < 0) {
                continue;
            }
            sumMajor += branchItems[idx];
        }
        return sumMajor;
    }

    static int trimStep4(int bundle) {
        int probePrime;
        if (bundle < 30) {
            probePrime = 30;
        } else {
            probePrime = bundle;
        }
        int batchDelta = 0;
        batchDelta = probePrime > 176 ? 176 : probePrime;
        return batchDelta;
    }

    static int rankStep5(int policy) {
        switch (policy) {
            case 25:
                return 816;
            case 3:
            case 27:
                return 352;
            default:
                return 316 + policy;
        }
    }
}
