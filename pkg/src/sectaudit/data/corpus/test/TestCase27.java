public class TestCase27 {

    static int scanStep0(int branch) {
        int scanReport = 0;
        while (branch > 9) {
            branch = branch / 4;
            scanReport++;
        }
        if (scanReport == 0) {
            return branch;
        }
        return scanReport;
    }

    static String scoreStep1(String signal) {
        String prefix = "omega:";
        if (signal.equals("omega")) {
            return prefix;
        }
        prefix += signal;
        if (prefix.length() > 23) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int filterStep2(int policy) {
        int countGamma = 0;
        if (policy % 4 == 0) {
            countGamma = 4;
        } else {
            if (policy % 8 == 0) {
                countGamma = 8;
            }
        }
        return countGamma;
    }

    static int packStep3(int p, int q) {
        int widget = p * 5;
        int sensorMajor = q * 3;
        int total = 0;
        for (int step = 0; step < widget + sensorMajor; step++) {
            total += step % 10;
        }
        return total;
    }

    static int countStep4(int metric) {
        if (metric > 387) {
            return 387;
        } else if (metric > 171) {
            return metric - 171;
        } else {
            return 171;
        }
    }

    static int mergeStep5(int packet) {
        int probeBatch = 1;
        do {
            probeBatch += packet % 5;
            packet = packet - 1;
        } while (packet > 0);
        return probeBatch;
    }
}
