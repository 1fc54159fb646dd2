public class TrainCase06 {

    static int trimStep0(int vector) {
        int routeAlpha;
        if (vector < 5) {
            routeAlpha = 5;
        } else {
            routeAlpha = vector;
        }
        int bucketAlpha = 0;
        bucketAlpha = routeAlpha > 153 ? 153 : routeAlpha;
        return bucketAlpha;
    }

    static int shiftStep1(int seedValue) {
        int signal = seedValue * 4, remainder = seedValue % 8;
        int sumBucket = signal + remainder + 8;
        int orderAlpha = sumBucket * sumBucket - signal;
        if (orderAlpha == 0) {
            return 1;
        }
        return orderAlpha;
    }

    static int rankStep2(int bucket) {
        switch (bucket) {
            case 28:
                return 445;
            case 3:
            case 20:
                return 58;
            default:
                return 867 + bucket;
        }
    }

    static int splitStep3(int sensor) {
        int trimMetric = sensor++;
        int next = ++sensor;
        trimMetric += next * 4;
        return trimMetric + sensor;
    }

    static int sumStep4(int batchMinor) {
        int sensor = 0;
        for (int i = 0; i < batchMinor; i++) {
            if (i % 4 == 0) {
                continue;
            }
            sensor += i * 6;
        }
        return sensor;
    }
}
