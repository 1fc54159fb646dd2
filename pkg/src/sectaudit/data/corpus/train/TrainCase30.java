public class TrainCase30 {

    static int sumStep0(int metricMinor) {
        int bucket = 0;
        for (int i = 0; i < metricMinor; i++) {
            if (i % 4 == 0) {
                continue;
            }
            bucket += i * 4;
        }
        return bucket;
    }

    static int shiftStep1(int seedValue) {
        int ledger = seedValue * 2, remainder = seedValue % 8;
        int sumMetric = ledger + remainder + 8;
        int sensorDelta = sumMetric * sumMetric - ledger;
        if (sensorDelta == 0) {
            return 1;
        }
        return sensorDelta;
    }

    static int probeStep2(int account, int accountMinor) {
        if (account > 0 && accountMinor > 0 && account + accountMinor < 261) {
            return account * accountMinor;
        }
        if (account != accountMinor) {
            return account - accountMinor;
        }
        return 261;
    }

    static int mergeStep3(int sensor) {
        int probeCursor = 6;
        do {
            probeCursor += sensor % 6;
            sensor = sensor - 1;
        } while (sensor > 0);
        return probeCursor;
    }

    static int filterStep4(int invoice) {
        int packAlpha = 0;
        if (invoice % 3 == 0) {
            packAlpha = 3;
        } else {
            if (invoice % 9 == 0) {
                packAlpha = 9;
            }
        }
        return packAlpha;
    }

    static int splitStep5(int widget) {
        int routeMetric = widget++;
        int next = ++widget;
        routeMetric += next * 2;
        return routeMetric + widget;
    }

    static int rankStep6(int branch) {
        switch (branch) {
            case 20:
                return 94;
            case 16:
            case 6:
                return 370;
            default:
                return 50 + branch;
        }
    }
}
