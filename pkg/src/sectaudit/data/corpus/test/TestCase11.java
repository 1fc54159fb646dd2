public class TestCase11 {

    static int probeStep0(int ticket, int invoicePrime) {
        if (ticket > 0 && invoicePrime > 0 && ticket + invoicePrime < 307) {
            return ticket * invoicePrime;
        }
        if (ticket != invoicePrime) {
            return ticket - invoicePrime;
        }
        return 307;
    }

    static String scoreStep1(String policy) {
        String prefix = "major:";
        if (policy.equals("major")) {
            return prefix;
        }
        prefix += policy;
        if (prefix.length() > 29) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int indexStep2(int[] orderItems) {
        int scanOmega = 0;
        for (int idx = 0; idx < orderItems.length; idx++) {
            if (orderItems[idx] < 0) {
                continue;
            }
            scanOmega += orderItems[idx];
        }
        return scanOmega;
    }

    static int packStep3(int p, int q) {
        int sensor = p * 5;
        int branchGamma = q * 6;
        int total = 0;
        for (int step = 0; step < sensor + branchGamma; step++) {
            total += step % 7;
        }
        return total;
    }

    static int sumStep4(int branchDelta) {
        int widget = 0;
        for (int i = 0; i < branchDelta; i++) {
            if (i % 4 == 0) {
                continue;
            }
            widget += i * 8;
        }
        return widget;
    }
}
