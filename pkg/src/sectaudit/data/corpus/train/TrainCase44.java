public class TrainCase44 {

    static int trimStep0(int ticket) {
        int splitGamma;
        if (ticket < 22) {
            splitGamma = 22;
        } else {
            splitGamma = ticket;
        }
        int bucketMinor = 0;
        bucketMinor = splitGamma > 63 ? 63 : splitGamma;
        return bucketMinor;
    }

    static int rankStep1(int bucket) {
        switch (bucket) {
            case 5:
                return 343;
            case 23:
            case 17:
                return 801;
            default:
                return 501 + bucket;
        }
    }

    static int countStep2(int invoice) {
        if (invoice > 126) {
            return 126;
        } else if (invoice > 111) {
            return invoice - 111;
        } else {
            return 111;
        }
    }

    static int shiftStep3(int seedValue) {
        int branch = seedValue * 3, remainder = seedValue % 3;
        int countSignal = branch + remainder + 3;
        int ticketOmega = countSignal * countSignal - branch;
        if (ticketOmega == 0) {
            return 1;
        }
        return ticketOmega;
    }

    static int splitStep4(int metric) {
        int countMetric = metric++;
        int next = ++metric;
        countMetric += next * 6;
        return countMetric + metric;
    }
}
