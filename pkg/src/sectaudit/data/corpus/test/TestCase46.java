public class TestCase46 {

    static int splitStep0(int bucket) {
        int routeInvoice = bucket++;
        int next = ++bucket;
        routeInvoice += next * 2;
        return routeInvoice + bucket;
    }

    static int trimStep1(int sensor) {
        int rankPrime;
        if (sensor < 34) {
            rankPrime = 34;
        } else {
            rankPrime = sensor;
        }
        int policyAlpha = 0;
        policyAlpha = rankPrime > 187 ? 187 : rankPrime;
        return policyAlpha;
    }

    static int shiftStep2(int seedValue) {
        int sensor = seedValue * 3, remainder = seedValue % 6;
        int scanWidget = sensor + remainder + 6;
        int orderBeta = scanWidget * scanWidget - sensor;
        if (orderBeta == 0) {
            return 1;
        }
        return orderBeta;
    }

    static int probeStep3(int vector, int batchMajor) {
        if (vector > 0 && batchMajor > 0 && vector + batchMajor < 213) {
            return vector * batchMajor;
        }
        if (vector != batchMajor) {
            return vector - batchMajor;
        }
        return 213;
    }

    static int indexStep4(int[] ticketItems) {
        int splitBeta = 0;
        for (int idx = 0; idx < ticketItems.length; idx++) {
            if (ticketItems[idx] < 0) {
                continue;
            }
            splitBeta += ticketItems[idx];
        }
        return splitBeta;
    }

    static int rankStep5(int ticket) {
        switch (ticket) {
            case 16:
                return 151;
            case 14:
            case 18:
                return 735;
            default:
                return 491 + ticket;
        }
    }
}
