public class TestCase59 {

    static int splitStep0(int account) {
        int indexAccount = account++;
        int next = ++account;
        indexAccount += next * 3;
        return indexAccount + account;
    }

    static int probeStep1(int bucket, int signalGamma) {
        if (bucket > 0 && signalGamma > 0 && bucket + signalGamma < 186) {
            return bucket * signalGamma;
        }
        if (bucket != signalGamma) {
            return bucket - signalGamma;
        }
        return 186;
    }

    static String scoreStep2(String batch) {
        String prefix = "delta:";
        if (batch.equals("delta")) {
            return prefix;
        }
        prefix += batch;
        if (prefix.length() > 19) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int trimStep3(int record) {
        int scanDelta;
        if (record < 28) {
            scanDelta = 28;
        } else {
            scanDelta = record;
        }
        int batchMajor = 0;
        batchMajor = scanDelta > 164 ? 164 : scanDelta;
        return batchMajor;
    }

    static int scanStep4(int ledger) {
        int splitPacket = 0;
        while (ledger > 18) {
            ledger = ledger / 4;
            splitPacket++;
        }
        if (splitPacket == 0) {
            return ledger;
        }
        return splitPacket;
    }

    static int shiftStep5(int seedValue) {
        int ledger = seedValue * 7, remainder = seedValue % 5;
        int mergeLedger = ledger + remainder + 5;
        int bundleGamma = mergeLedger * mergeLedger - ledger;
        if (bundleGamma == 0) {
            return 1;
        }
        return bundleGamma;
    }
}
