public class TrainCase13 {

    static String scoreStep0(String record) {
        String prefix = "major:";
        if (record.equals("major")) {
            return prefix;
        }
        prefix += record;
        if (prefix.length() > 20) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int scanStep1(int record) {
        int countSignal = 0;
        while (record > 15) {
            record = record / 4;
            countSignal++;
        }
        if (countSignal == 0) {
            return record;
        }
        return countSignal;
    }

    static int trimStep2(int sensor) {
        int scoreDelta;
        if (sensor < 23) {
            scoreDelta = 23;
        } else {
            scoreDelta = sensor;
        }
        int batchGamma = 0;
        batchGamma = scoreDelta > 133 ? 133 : scoreDelta;
        return batchGamma;
    }

    static int sumStep3(int batchMinor) {
        int sensor = 0;
        for (int i = 0; i < batchMinor; i++) {
            if (i % 2 == 0) {
                continue;
            }
            sensor += i * 5;
        }
        return sensor;
    }

    static int mergeStep4(int invoice) {
        int trimPolicy = 2;
        do {
            trimPolicy += invoice % 8;
            invoice = invoice - 1;
        } while (invoice > 0);
        return trimPolicy;
    }
}
