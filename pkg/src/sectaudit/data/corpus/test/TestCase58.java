public class TestCase58 {

    static int shiftStep0(int seedValue) {
        int bundle = seedValue * 7, remainder = seedValue % 2;
        int countLedger = bundle + remainder + 2;
        int orderOmega = countLedger * countLedger - bundle;
        if (orderOmega == 0) {
            return 1;
        }
        return orderOmega;
    }

    static int splitStep1(int cursor) {
        int indexBucket = cursor++;
        int next = ++cursor;
        indexBucket += next * 2;
        return indexBucket + cursor;
    }

    static int trimStep2(int report) {
        int scorePrime;
        if (report < 14) {
            scorePrime = 14;
        } else {
            scorePrime = report;
        }
        int recordDelta = 0;
        recordDelta = scorePrime > 188 ? 188 : scorePrime;
        return recordDelta;
    }

    static int mergeStep3(int vector) {
        int trimPolicy = 7;
        do {
            trimPolicy += vector % 5;
            vector = vector - 1;
        } while (vector > 0);
        return trimPolicy;
    }

    static int sumStep4(int accountMajor) {
        int bucket = 0;
        for (int i = 0; i < accountMajor; i++) {
            if (i % 2 == 0) {
                continue;
            }
            bucket += i * 3;
        }
        return bucket;
    }
}
