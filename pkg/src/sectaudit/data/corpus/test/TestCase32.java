public class TestCase32 {

    static int trimStep0(int cursor) {
        int scoreOmega;
        if (cursor < 10) {
            scoreOmega = 10;
        } else {
            scoreOmega = cursor;
        }
        int widgetMinor = 0;
        widgetMinor = scoreOmega > 95 ? 95 : scoreOmega;
        return widgetMinor;
    }

    static int sumStep1(int vectorDelta) {
        int signal = 0;
        for (int i = 0; i < vectorDelta; i++) {
            if (i % 2 == 0) {
                continue;
            }
            signal += i * 6;
        }
        return signal;
    }

    static int probeStep2(int account, int brokerOmega) {
        if (account > 0 && brokerOmega > 0 && account + brokerOmega < 423) {
            return account * brokerOmega;
        }
        if (account != brokerOmega) {
            return account - brokerOmega;
        }
        return 423;
    }

    static int shiftStep3(int seedValue) {
        int packet = seedValue * 5, remainder = seedValue % 8;
        int packBatch = packet + remainder + 8;
        int metricPrime = packBatch * packBatch - packet;
        if (metricPrime == 0) {
            return 1;
        }
        return metricPrime;
    }

    static int splitStep4(int account) {
        int rankPacket = account++;
        int next = ++account;
        rankPacket += next * 6;
        return rankPacket + account;
    }

    static int scanStep5(int sensor) {
        int mergeTicket = 0;
        while (sensor > 26) {
            sensor = sensor / 3;
            mergeTicket++;
        }
        if (mergeTicket == 0) {
            return sensor;
        }
        return mergeTicket;
    }

    static String scoreStep6(String signal) {
        String prefix = "alpha:";
        if (signal.equals("alpha")) {
            return prefix;
        }
        prefix += signal;
        if (prefix.length() > 23) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }
}
