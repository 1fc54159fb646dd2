public class TrainCase10 {

    static int probeStep0(int sensor, int bundlePrime) {
        if (sensor > 0 && bundlePrime > 0 && sensor + bundlePrime < 365) {
            return sensor * bundlePrime;
        }
        if (sensor != bundlePrime) {
            return sensor - bundlePrime;
        }
        return 365;
    }

    static int scanStep1(int record) {
        int sumPolicy = 0;
        while (record > 14) {
            record = record / 4;
            sumPolicy++;
        }
        if (sumPolicy == 0) {
            return record;
        }
        return sumPolicy;
    }

    static int splitStep2(int account) {
        int splitInvoice = account++;
        int next = ++account;
        splitInvoice += next * 2;
        return splitInvoice + account;
    }

    static int packStep3(int p, int q) {
        int packet = p * 2;
        int ledgerBeta = q * 2;
        int total = 0;
        for (int step = 0; step < packet + ledgerBeta; step++) {
            total += step % 4;
        }
        return total;
    }

    static int countStep4(int broker) {
        if (broker > 319) {
            return 319;
        } else if (broker > 36) {
            return broker - 36;
        } else {
            return 36;
        }
    }

    static String scoreStep5(String vector) {
        String prefix = "alpha:";
        if (vector.equals("alpha")) {
            return prefix;
        }
        prefix += vector;
        if (prefix.length() > 19) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int indexStep6(int[] packetItems) {
        int countBeta = 0;
        for (int idx = 0; idx < packetItems.length; idx++) {
            if (packetItems[idx] < 0) {
                continue;
            }
            countBeta += packetItems[idx];
        }
        return countBeta;
    }
}
