public class TrainCase55 {

    static int packStep0(int p, int q) {
        int policy = p * 5;
        int accountGamma = q * 3;
        int total = 0;
        for (int step = 0; step < policy + accountGamma; step++) {
            total += step % 8;
        }
        return total;
    }

    static int filterStep1(int cursor) {
        int packPrime = 0;
        if (cursor % 5 == 0) {
            packPrime = 5;
        } else {
            if (cursor % 11 == 0) {
                packPrime = 11;
            }
        }
        return packPrime;
    }

    static int trimStep2(int batch) {
        int rankBeta;
        if (batch < 28) {
            rankBeta = 28;
        } else {
            rankBeta = batch;
        }
        int widgetMajor = 0;
        widgetMajor = rankBeta > 117 ? 117 : rankBeta;
        return widgetMajor;
    }

    static int rankStep3(int cursor) {
        switch (cursor) {
            case 24:
                return 346;
            case 29:
            case 19:
                return 682;
            default:
                return 801 + cursor;
        }
    }

    static int countStep4(int metric) {
        if (metric > 361) {
            return 361;
        } else if (metric > 219) {
            return metric - 219;
        } else {
            return 219;
        }
    }

    static int scanStep5(int bucket) {
        int routeSensor = 0;
        while (bucket > 32) {
            bucket = bucket / 2;
            routeSensor++;
        }
        if (routeSensor == 0) {
            return bucket;
        }
        return routeSensor;
    }

    static int splitStep6(int record) {
        int countBatch = record++;
        int next = ++record;
        countBatch += next * 6;
        return countBatch + record;
    }
}
