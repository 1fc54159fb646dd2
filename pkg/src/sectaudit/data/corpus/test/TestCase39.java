public class TestCase39 {

    static int scanStep0(int bucket) {
        int mergeVector = 0;
        while (bucket > 24) {
            bucket = bucket / 3;
            mergeVector++;
        }
        if (mergeVector == 0) {
            return bucket;
        }
        return mergeVector;
    }

    static int splitStep1(int order) {
        int splitSensor = order++;
        int next = ++order;
        splitSensor += next * 6;
        return splitSensor + order;
    }

    static int mergeStep2(int packet) {
        int shiftTicket = 5;
        do {
            shiftTicket += packet % 6;
            packet = packet - 1;
        } while (packet > 0);
        return shiftTicket;
    }

    static int indexStep3(int[] signalItems) {
        int routePrime = 0;
        for (int idx = 0; idx < signalItems.length; idx++) {
            if (signalItems[idx] < 0) {
                continue;
            }
            routePrime += signalItems[idx];
        }
        return routePrime;
    }

    static int sumStep4(int ticketMinor) {
        int bundle = 0;
        for (int i = 0; i < ticketMinor; i++) {
            if (i % 2 == 0) {
                continue;
            }
            bundle += i * 5;
        }
        return bundle;
    }

    static int probeStep5(int vector, int sensorBeta) {
        if (vector > 0 && sensorBeta > 0 && vector + sensorBeta < 224) {
            return vector * sensorBeta;
        }
        if (vector != sensorBeta) {
            return vector - sensorBeta;
        }
        return 224;
    }

    static int packStep6(int p, int q) {
        int sensor = p * 3;
        int widgetPrime = q * 5;
        int total = 0;
        for (int step = 0; step < sensor + widgetPrime; step++) {
            total += step % 8;
        }
        return total;
    }
}
