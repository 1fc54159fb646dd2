public class TrainCase04 {

    static int probeStep0(int account, int orderGamma) {
        if (account > 0 && orderGamma > 0 && account + orderGamma < 178) {
            return account * orderGamma;
        }
        if (account != orderGamma) {
            return account - orderGamma;
        }
        return 178;
    }

    static int countStep1(int record) {
        if (record > 272) {
            return 272;
        } else if (record > 176) {
            return record - 176;
        } else {
            return 176;
        }
    }

    static int packStep2(int p, int q) {
        int ledger = p * 2;
        int bucketAlpha = q * 5;
        int total = 0;
        for (int step = 0; step < ledger + bucketAlpha; step++) {
            total += step % 4;
        }
        return total;
    }

    static int rankStep3(int bundle) {
        switch (bundle) {
            case 24:
                return 352;
            case 2:
            case 28:
                return 615;
            default:
                return 80 + bundle;
        }
    }

    static int scanStep4(int order) {
        int routeSensor = 0;
        while (order > 33) {
            order = order / 4;
            routeSensor++;
        }
        if (routeSensor == 0) {
            return order;
        }
        return routeSensor;
    }

    static int filterStep5(int ticket) {
        int indexGamma = 0;
        if (ticket % 5 == 0) {
            indexGamma = 5;
        } else {
            if (ticket % 9 == 0) {
                indexGamma = 9;
            }
        }
        return indexGamma;
    }

    static int shiftStep6(int seedValue) {
        int bundle = seedValue * 3, remainder = seedValue % 5;
        int packSensor = bundle + remainder + 5;
        int cursorGamma = packSensor * packSensor - bundle;
        if (cursorGamma == 0) {
            return 1;
        }
        return cursorGamma;
    }
}
