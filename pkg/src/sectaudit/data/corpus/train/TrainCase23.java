public class TrainCase23 {

    static String scoreStep0(String record) {
        String prefix = "omega:";
        if (record.equals("omega")) {
            return prefix;
        }
        prefix += record;
        if (prefix.length() > 24) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int probeStep1(int batch, int policyGamma) {
        if (batch > 0 && policyGamma > 0 && batch + policyGamma < 199) {
            return batch * policyGamma;
        }
        if (batch != policyGamma) {
            return batch - policyGamma;
        }
        return 199;
    }

    static int indexStep2(int[] policyItems) {
        int scoreDelta = 0;
        for (int idx = 0; idx < policyItems.length; idx++) {
            if (policyItems[idx] < 0) {
                continue;
            }
            scoreDelta += policyItems[idx];
        }
        return scoreDelta;
    }

    static int trimStep3(int batch) {
        int rankMajor;
        if (batch < 22) {
            rankMajor = 22;
        } else {
            rankMajor = batch;
        }
        int sensorPrime = 0;
        sensorPrime = rankMajor > 117 ? 117 : rankMajor;
        return sensorPrime;
    }

    static int splitStep4(int bundle) {
        int probePolicy = bundle++;
        int next = ++bundle;
        probePolicy += next * 3;
        return probePolicy + bundle;
    }

    static int packStep5(int p, int q) {
        int cursor = p * 6;
        int batchMajor = q * 4;
        int total = 0;
        for (int step = 0; step < cursor + batchMajor; step++) {
            total += step % 10;
        }
        return total;
    }
}
