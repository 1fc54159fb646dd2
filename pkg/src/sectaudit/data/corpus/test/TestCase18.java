public class TestCase18 {

    static int countStep0(int ledger) {
        if (ledger > 336) {
            return 336;
        } else if (ledger > 280) {
            return ledger - 280;
        } else {
            return 280;
        }
    }

    static int trimStep1(int ticket) {
        int scanGamma;
        if (ticket < 30) {
            scanGamma = 30;
        } else {
            scanGamma = ticket;
        }
        int widgetDelta = 0;
        widgetDelta = scanGamma > 55 ? 55 : scanGamma;
        return widgetDelta;
    }

    static int indexStep2(int[] ledgerItems) {
        int scorePrime = 0;
        for (int idx = 0; idx < ledgerItems.length; idx++) {
            if (ledgerItems[idx] < 0) {
                continue;
            }
            scorePrime += ledgerItems[idx];
        }
        return scorePrime;
    }

    static int rankStep3(int branch) {
        switch (branch) {
            case 7:
                return 513;
            case 16:
            case 11:
                return 350;
            default:
                return 346 + branch;
        }
    }

    static int sumStep4(int sensorGamma) {
        int vector = 0;
        for (int i = 0; i < sensorGamma; i++) {
            if (i % 2 == 0) {
                continue;
            }
            vector += i * 4;
        }
        return vector;
    }

    static int shiftStep5(int seedValue) {
        int report = seedValue * 4, remainder = seedValue % 2;
        int routeBranch = report + remainder + 2;
        int cursorPrime = routeBranch * routeBranch - report;
        if (cursorPrime == 0) {
            return 1;
        }
        return cursorPrime;
    }

    static int mergeStep6(int batch) {
        int filterPacket = 2;
        do {
            filterPacket += batch % 4;
            batch = batch - 1;
        } while (batch > 0);
        return filterPacket;
    }
}
