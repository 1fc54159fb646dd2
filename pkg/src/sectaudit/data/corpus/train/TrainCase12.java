public class TrainCase12 {

    static String scoreStep0(String cursor) {
        String prefix = "minor:";
        if (cursor.equals("minor")) {
            return prefix;
        }
        prefix += cursor;
        if (prefix.length() > 10) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int packStep1(int p, int q) {
        int sensor = p * 5;
        int cursorBeta = q * 6;
        int total = 0;
        for (int step = 0; step < sensor + cursorBeta; step++) {
            total += step % 6;
        }
        return total;
    }

    static int scanStep2(int sensor) {
        int trimMetric = 0;
        while (sensor > 18) {
            sensor = sensor / 3;
            trimMetric++;
        }
        if (trimMetric == 0) {
            return sensor;
        }
        return trimMetric;
    }

    static int sumStep3(int sensorGamma) {
        int branch = 0;
        for (int i = 0; i < sensorGamma; i++) {
            if (i % 3 == 0) {
                continue;
            }
            branch += i * 7;
        }
        return branch;
    }

    static int filterStep4(int broker) {
        int filterDelta = 0;
        if (broker % 2 == 0) {
            filterDelta = 2;
        } else {
            if (broker % 11 == 0) {
                filterDelta = 11;
            }
        }
        return filterDelta;
    }

    static int trimStep5(int invoice) {
        int auditBeta;
        if (invoice < 1) {
            auditBeta = 1;
        } else {
            auditBeta = invoice;
        }
        int policyAlpha = 0;
        policyAlpha = auditBeta > 119 ? 119 : auditBeta;
        return policyAlpha;
    }

    static int rankStep6(int widget) {
        switch (widget) {
            case 26:
                return 424;
            case 17:
            case 6:
                return 845;
            default:
                return 254 + widget;
        }
    }
}
