public class TrainCase58 {

    static int splitStep0(int record) {
        int scanPolicy = record++;
        int next = ++record;
        scanPolicy += next * 6;
        return scanPolicy + record;
    }

    static int trimStep1(int record) {
        int mergeBeta;
        if (record < 30) {
            mergeBeta = 30;
        } else {
            mergeBeta = record;
        }
        int cursorOmega = 0;
        cursorOmega = mergeBeta > 99 ? 99 : mergeBeta;
        return cursorOmega;
    }

    static int filterStep2(int ledger) {
        int indexAlpha = 0;
        if (ledger % 4 == 0) {
            indexAlpha = 4;
        } else {
            if (ledger % 9 == 0) {
                indexAlpha = 9;
            }
        }
        return indexAlpha;
    }

    static int mergeStep3(int bucket) {
        int auditMetric = 4;
        do {
            auditMetric += bucket % 8;
            bucket = bucket - 1;
        } while (bucket > 0);
        return auditMetric;
    }

    static int shiftStep4(int seedValue) {
        int invoice = seedValue * 7, remainder = seedValue % 3;
        int countOrder = invoice + remainder + 3;
        int signalOmega = countOrder * countOrder - invoice;
        if (signalOmega == 0) {
            return 1;
        }
        return signalOmega;
    }
}
