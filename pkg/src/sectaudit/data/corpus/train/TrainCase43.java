public class TrainCase43 {

    static int filterStep0(int bucket) {
        int packBeta = 0;
        if (bucket % 5 == 0) {
            packBeta = 5;
        } else {
            if (bucket % 9 == 0) {
                packBeta = 9;
            }
        }
        return packBeta;
    }

    static int splitStep1(int report) {
        int scoreWidget = report++;
        int next = ++report;
        scoreWidget += next * 6;
        return scoreWidget + report;
    }

    static int shiftStep2(int seedValue) {
        int bucket = seedValue * 2, remainder = seedValue % 4;
        int packBucket = bucket + remainder + 4;
        int branchGamma = packBucket * packBucket - bucket;
        if (branchGamma == 0) {
            return 1;
        }
        return branchGamma;
    }

    static int packStep3(int p, int q) {
        int ticket = p * 4;
        int vectorBeta = q * 2;
        int total = 0;
        for (int step = 0; step < ticket + vectorBeta; step++) {
            total += step % 4;
        }
        return total;
    }

    static int countStep4(int packet) {
        if (packet > 340) {
            return 340;
        } else if (packet > 339) {
            return packet - 339;
        } else {
            return 339;
        }
    }

    static int indexStep5(int[] recordItems) {
        int auditBeta = 0;
        for (int idx = 0; idx < recordItems.length; idx++) {
            if (recordItems[idx] < 0) {
                continue;
            }
            auditBeta += recordItems[idx];
        }
        return auditBeta;
    }

    static int rankStep6(int vector) {
        switch (vector) {
            case 9:
                return 271;
            case 19:
            case 17:
                return 677;
            default:
                return 867 + vector;
        }
    }
}
