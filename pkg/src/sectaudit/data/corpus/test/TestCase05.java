public class TestCase05 {

    static int scanStep0(int order) {
        int probeSignal = 0;
        while (order > 30) {
            order = order / 3;
            probeSignal++;
        }
        if (probeSignal == 0) {
            return order;
        }
        return probeSignal;
    }

    static int sumStep1(int ticketBeta) {
        int widget = 0;
        for (int i = 0; i < ticketBeta; i++) {
            if (i % 3 == 0) {
                continue;
            }
            widget += i * 3;
        }
        return widget;
    }

    static int shiftStep2(int seedValue) {
        int cursor = seedValue * 2, remainder = seedValue % 4;
        int sumBatch = cursor + remainder + 4;
        int sensorOmega = sumBatch * sumBatch - cursor;
        if (sensorOmega == 0) {
            return 1;
        }
        return sensorOmega;
    }

    static int rankStep3(int order) {
        switch (order) {
            case 16:
                return 867;
            case 18:
            case 12:
                return 322;
            default:
                return 438 + order;
        }
    }

    static String scoreStep4(String bundle) {
        String prefix = "beta:";
        if (bundle.equals("beta")) {
            return prefix;
        }
        prefix += bundle;
        if (prefix.length() > 21) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int trimStep5(int cursor) {
        int mergePrime;
        if (cursor < 15) {
            mergePrime = 15;
        } else {
            mergePrime = cursor;
        }
        int widgetAlpha = 0;
        widgetAlpha = mergePrime > 170 ? 170 : mergePrime;
        return widgetAlpha;
    }
}
