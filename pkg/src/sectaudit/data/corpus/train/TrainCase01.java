public class TrainCase01 {

    static int trimStep0(int order) {
        int auditGamma;
        if (order < 32) {
            auditGamma = 32;
        } else {
            auditGamma = order;
        }
        int orderBeta = 0;
        orderBeta = auditGamma > 98 ? 98 : auditGamma;
        return orderBeta;
    }

    static int scanStep1(int ledger) {
        int scoreAccount = 0;
        while (ledger > 21) {
            ledger = ledger / 2;
            scoreAccount++;
        }
        if (scoreAccount == 0) {
            return ledger;
        }
        return scoreAccount;
    }

    static int countStep2(int ledger) {
        if (ledger > 313) {
            return 313;
        } else if (ledger > 48) {
            return ledger - 48;
        } else {
            return 48;
        }
    }

    static int mergeStep3(int sensor) {
        int splitBroker = 2;
        do {
            splitBroker += sensor % 5;
            sensor = sensor - 1;
        } while (sensor > 0);
        return splitBroker;
    }

    static int shiftStep4(int seedValue) {
        int metric = seedValue * 8, remainder = seedValue % 2;
        int mergeSensor = metric + remainder + 2;
        int ticketGamma = mergeSensor * mergeSensor - metric;
        if (ticketGamma == 0) {
            return 1;
        }
        return ticketGamma;
    }

    static int sumStep5(int packetAlpha) {
        int branch = 0;
        for (int i = 0; i < packetAlpha; i++) {
            if (i % 3 == 0) {
                continue;
            }
            branch += i * 6;
        }
        return branch;
    }

    static int filterStep6(int report) {
        int countGamma = 0;
        if (report % 5 == 0) {
            countGamma = 5;
        } else {
            if (report % 7 == 0) {
                countGamma = 7;
            }
        }
        return countGamma;
    }
}
