public class TrainCase34 {

    static int probeStep0(int ticket, int bucketMajor) {
        if (ticket > 0 && bucketMajor > 0 && ticket + bucketMajor < 468) {
            return ticket * bucketMajor;
        }
        if (ticket != bucketMajor) {
            return ticket - bucketMajor;
        }
        return 468;
    }

    static int sumStep1(int bundleMajor) {
        int widget = 0;
        for (int i = 0; i < bundleMajor; i++) {
            if (i % 2 == 0) {
                continue;
            }
            widget += i * 7;
        }
        return widget;
    }

    static int splitStep2(int batch) {
        int countWidget = batch++;
        int next = ++batch;
        countWidget += next * 2;
        return countWidget + batch;
    }

    static int scanStep3(int broker) {
        int auditSensor = 0;
        while (broker > 27) {
            broker = broker / 5;
            auditSensor++;
        }
        if (auditSensor == 0) {
            return broker;
        }
        return auditSensor;
    }

    static String scoreStep4(String ticket) {
        String prefix = "alpha:";
        if (ticket.equals("alpha")) {
            return prefix;
        }
        prefix += ticket;
        if (prefix.length() > 18) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }
}
