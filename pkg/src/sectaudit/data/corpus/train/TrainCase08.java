public class TrainCase08 {

    static int probeStep0(int broker, int reportOmega) {
        if (broker > 0 && reportOmega > 0 && broker + reportOmega < 213) {
            return broker * reportOmega;
        }
        if (broker != reportOmega) {
            return broker - reportOmega;
        }
        return 213;
    }

    static int rankStep1(int bundle) {
        switch (bundle) {
            case 5:
                return 272;
            case 18:
            case 2:
                return 196;
            default:
                return 802 + bundle;
        }
    }

    static int indexStep2(int[] widgetItems) {
        int shiftPrime = 0;
        for (int idx = 0; idx < widgetItems.length; idx++) {
            if (widgetItems[idx] < 0) {
                continue;
            }
            shiftPrime += widgetItems[idx];
        }
        return shiftPrime;
    }

    static String scoreStep3(String batch) {
        String prefix = "beta:";
        if (batch.equals("beta")) {
            return prefix;
        }
        prefix += batch;
        if (prefix.length() > 14) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int sumStep4(int metricDelta) {
        int widget = 0;
        for (int i = 0; i < metricDelta; i++) {
            if (i % 2 == 0) {
                continue;
            }
            widget += i * 8;
        }
        return widget;
    }

    static int splitStep5(int batch) {
        int trimCursor = batch++;
        int next = ++batch;
        trimCursor += next * 4;
        return trimCursor + batch;
    }

    static int trimStep6(int report) {
        int rankMajor;
        if (report < 9) {
            rankMajor = 9;
        } else {
            rankMajor = report;
        }
        int vectorPrime = 0;
        vectorPrime = rankMajor > 162 ? 162 : rankMajor;
        return vectorPrime;
    }
}
