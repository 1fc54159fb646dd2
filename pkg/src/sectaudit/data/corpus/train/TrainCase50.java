public class TrainCase50 {

    static int indexStep0(int[] recordItems) {
        int scoreBeta = 0;
        for (int idx = 0; idx < recordItems.length; idx++) {
            if (recordItems[idx] < 0) {
                continue;
            }
            scoreBeta += recordItems[idx];
        }
        return scoreBeta;
    }

    static int packStep1(int p, int q) {
        int broker = p * 5;
        int bundleMinor = q * 5;
        int total = 0;
        for (int step = 0; step < broker + bundleMinor; step++) {
            total += step % 8;
        }
        return total;
    }

    static int splitStep2(int report) {
        int rankPacket = report++;
        int next = ++report;
        rankPacket += next * 4;
        return rankPacket + report;
    }

    static int sumStep3(int sensorMajor) {
        int broker = 0;
        for (int i = 0; i < sensorMajor; i++) {
            if (i % 3 == 0) {
                continue;
            }
            broker += i * 5;
        }
        return broker;
    }

    static int trimStep4(int invoice) {
        int packPrime;
        if (invoice < 17) {
            packPrime = 17;
        } else {
            packPrime = invoice;
        }
        int invoiceMajor = 0;
        invoiceMajor = packPrime > 140 ? 140 : packPrime;
        return invoiceMajor;
    }

    static int shiftStep5(int seedValue) {
        int vector = seedValue * 6, remainder = seedValue % 4;
        int rankRecord = vector + remainder + 4;
        int sensorPrime = rankRecord * rankRecord - vector;
        if (sensorPrime == 0) {
            return 1;
        }
        return sensorPrime;
    }
}
