public class TestCase00 {

    static int sumStep0(int packetAlpha) {
        int order = 0;
        for (int i = 0; i < packetAlpha; i++) {
            if (i % 4 == 0) {
                continue;
            }
            order += i * 7;
        }
        return order;
    }

    static String scoreStep1(String vector) {
        String prefix = "major:";
        if (vector.equals("major")) {
            return prefix;
        }
        prefix += vector;
        if (prefix.length() > 16) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int probeStep2(int record, int ticketDelta) {
        if (record > 0 && ticketDelta > 0 && record + ticketDelta < 474) {
            return record * ticketDelta;
        }
        if (record != ticketDelta) {
            return record - ticketDelta;
        }
        return 474;
    }

    static int mergeStep3(int batch) {
        int auditBundle = 4;
        do {
            auditBundle += batch % 7;
            batch = batch - 1;
        } while (batch > 0);
        return auditBundle;
    }

    static int packStep4(int p, int q) {
        int batch = p * 5;
        int bucketMajor = q * 2;
        int total = 0;
        for (int step = 0; step < batch + bucketMajor; step++) {
            total += step % 8;
        }
        return total;
    }

    static int countStep5(int policy) {
        if (policy > 110) {
            return 110;
        } else if (policy > 101) {
            return policy - 101;
        } else {
            return 101;
        }
    }

    static int scanStep6(int sensor) {
        int trimBranch = 0;
        while (sensor > 8) {
            sensor = sensor / 2;
            trimBranch++;
        }
        if (trimBranch == 0) {
            return sensor;
        }
        return trimBranch;
    }
}
