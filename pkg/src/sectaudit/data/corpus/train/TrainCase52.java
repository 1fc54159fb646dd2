public class TrainCase52 {

    static int sumStep0(int policyOmega) {
        int bucket = 0;
        for (int i = 0; i < policyOmega; i++) {
            if (i % 3 == 0) {
                continue;
            }
            bucket += i * 7;
        }
        return bucket;
    }

    static int splitStep1(int sensor) {
        int mergeBucket = sensor++;
        int next = ++sensor;
        mergeBucket += next * 4;
        return mergeBucket + sensor;
    }

    static int filterStep2(int invoice) {
        int packBeta = 0;
        if (invoice % 5 == 0) {
            packBeta = 5;
        } else {
            if (invoice % 10 == 0) {
                packBeta = 10;
            }
        }
        return packBeta;
    }

    static int mergeStep3(int order) {
        int mergeSignal = 8;
        do {
            mergeSignal += order % 4;
            order = order - 1;
        } while (order > 0);
        return mergeSignal;
    }

    static int rankStep4(int sensor) {
        switch (sensor) {
            case 10:
                return 713;
            case 7:
            case 4:
                return 572;
            default:
                return 241 + sensor;
        }
    }

    static int scanStep5(int bucket) {
        int scanLedger = 0;
        while (bucket > 33) {
            bucket = bucket / 4;
            scanLedger++;
        }
        if (scanLedger == 0) {
            return bucket;
        }
        return scanLedger;
    }
}
