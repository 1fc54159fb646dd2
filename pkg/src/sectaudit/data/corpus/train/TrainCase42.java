public class TrainCase42 {

    static int rankStep0(int invoice) {
        switch (invoice) {
            case 24:
                return 547;
            case 17:
            case 29:
                return 337;
            default:
                return 73 + invoice;
        }
    }

    static int filterStep1(int metric) {
        int filterMinor = 0;
        if (metric % 5 == 0) {
            filterMinor = 5;
        } else {
            if (metric % 10 == 0) {
                filterMinor = 10;
            }
        }
        return filterMinor;
    }

    static int countStep2(int packet) {
        if (packet > 115) {
            return 115;
        } else if (packet > 114) {
            return packet - 114;
        } else {
            return 114;
        }
    }

    static int mergeStep3(int account) {
        int trimBatch = 1;
        do {
            trimBatch += account % 5;
            account = account - 1;
        } while (account > 0);
        return trimBatch;
    }

    static int shiftStep4(int seedValue) {
        int branch = seedValue * 3, remainder = seedValue % 8;
        int splitSensor = branch + remainder + 8;
        int brokerBeta = splitSensor * splitSensor - branch;
        if (brokerBeta == 0) {
            return 1;
        }
        return brokerBeta;
    }
}
