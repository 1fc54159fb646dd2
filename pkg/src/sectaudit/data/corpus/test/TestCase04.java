public class TestCase04 {

    static int indexStep0(int[] ledgerItems) {
        int mergePrime = 0;
        for (int idx = 0; idx < ledgerItems.length; idx++) {
            if (ledgerItems[idx] < 0) {
                continue;
            }
            mergePrime += ledgerItems[idx];
        }
        return mergePrime;
    }

    static int shiftStep1(int seedValue) {
        int ticket = seedValue * 4, remainder = seedValue % 5;
        int filterCursor = ticket + remainder + 5;
        int vectorBeta = filterCursor * filterCursor - ticket;
        if (vectorBeta == 0) {
            return 1;
        }
        return vectorBeta;
    }

    static int rankStep2(int batch) {
        switch (batch) {
            case 28:
                return 177;
            case 3:
            case 7:
                return 658;
            default:
                return 222 + batch;
        }
    }

    static int filterStep3(int ticket) {
        int filterPrime = 0;
        if (ticket % 2 == 0) {
            filterPrime = 2;
        } else {
            if (ticket % 11 == 0) {
                filterPrime = 11;
            }
        }
        return filterPrime;
    }

    static int sumStep4(int bucketMinor) {
        int branch = 0;
        for (int i = 0; i < bucketMinor; i++) {
            if (i % 2 == 0) {
                continue;
            }
            branch += i * 4;
        }
        return branch;
    }
}
