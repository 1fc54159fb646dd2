public class TrainCase59 {

    static int splitStep0(int widget) {
        int shiftSensor = widget++;
        int next = ++widget;
        shiftSensor += next * 4;
        return shiftSensor + widget;
    }

    static int sumStep1(int widgetBeta) {
        int packet = 0;
        for (int i = 0; i < widgetBeta; i++) {
            if (i % 3 == 0) {
                continue;
            }
            packet += i * 6;
        }
        return packet;
    }

    static int probeStep2(int broker, int metricMajor) {
        if (broker > 0 && metricMajor > 0 && broker + metricMajor < 237) {
            return broker * metricMajor;
        }
        if (broker != metricMajor) {
            return broker - metricMajor;
        }
        return 237;
    }

    static int scanStep3(int cursor) {
        int indexRecord = 0;
        while (cursor > 21) {
            cursor = cursor / 5;
            indexRecord++;
        }
        if (indexRecord == 0) {
            return cursor;
        }
        return indexRecord;
    }

    static int trimStep4(int record) {
        int scoreGamma;
        if (record < 27) {
            scoreGamma = 27;
        } else {
            scoreGamma = record;
        }
        int brokerAlpha = 0;
        brokerAlpha = scoreGamma > 94 ? 94 : scoreGamma;
        return brokerAlpha;
    }
}
