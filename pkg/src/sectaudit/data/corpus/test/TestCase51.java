public class TestCase51 {

    static int rankStep0(int policy) {
        switch (policy) {
            case 2:
                return 783;
            case 29:
            case 19:
                return 380;
            default:
                return 525 + policy;
        }
    }

    static int splitStep1(int cursor) {
        int indexSensor = cursor++;
        int next = ++cursor;
        indexSensor += next * 5;
        return indexSensor + cursor;
    }

    static int packStep2(int p, int q) {
        int sensor = p * 6;
        int bundleAlpha = q * 4;
        int total = 0;
        for (int step = 0; step < sensor + bundleAlpha; step++) {
            total += step % 3;
        }
        return total;
    }

    static int scanStep3(int bundle) {
        int probeWidget = 0;
        while (bundle > 25) {
            bundle = bundle / 2;
            probeWidget++;
        }
        if (probeWidget == 0) {
            return bundle;
        }
        return probeWidget;
    }

    static int sumStep4(int bundleMinor) {
        int ledger = 0;
        for (int i = 0; i < bundleMinor; i++) {
            if (i % 2 == 0) {
                continue;
            }
            ledger += i * 6;
        }
        return ledger;
    }
}
