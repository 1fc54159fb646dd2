public class TestCase41 {

    static int trimStep0(int sensor) {
        int routeOmega;
        if (sensor < 33) {
            routeOmega = 33;
        } else {
            routeOmega = sensor;
        }
        int brokerOmega = 0;
        brokerOmega = routeOmega > 162 ? 162 : routeOmega;
        return brokerOmega;
    }

    static int countStep1(int packet) {
        if (packet > 278) {
            return 278;
        } else if (packet > 106) {
            return packet - 106;
        } else {
            return 106;
        }
    }

    static int mergeStep2(int report) {
        int countSignal = 7;
        do {
            countSignal += report % 4;
            report = report - 1;
        } while (report > 0);
        return countSignal;
    }

    static String scoreStep3(String branch) {
        String prefix = "delta:";
        if (branch.equals("delta")) {
            return prefix;
        }
        prefix += branch;
        if (prefix.length() > 15) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int filterStep4(int metric) {
        int scoreDelta = 0;
        if (metric % 4 == 0) {
            scoreDelta = 4;
        } else {
            if (metric % 8 == 0) {
                scoreDelta = 8;
            }
        }
        return scoreDelta;
    }

    static int sumStep5(int packetDelta) {
        int ticket = 0;
        for (int i = 0; i < packetDelta; i++) {
            if (i % 3 == 0) {
                continue;
            }
            ticket += i * 2;
        }
        return ticket;
    }
}
