public class TrainCase46 {

    static String scoreStep0(String broker) {
        String prefix = "prime:";
        if (broker.equals("prime")) {
            return prefix;
        }
        prefix += broker;
        if (prefix.length() > 28) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int splitStep1(int packet) {
        int shiftSensor = packet++;
        int next = ++packet;
        shiftSensor += next * 3;
        return shiftSensor + packet;
    }

    static int trimStep2(int widget) {
        int splitBeta;
        if (widget < 9) {
            splitBeta = 9;
        } else {
            splitBeta = widget;
        }
        int ledgerAlpha = 0;
        ledgerAlpha = splitBeta > 179 ? 179 : splitBeta;
        return ledgerAlpha;
    }

    static int packStep3(int p, int q) {
        int batch = p * 3;
        int cursorPrime = q * 3;
        int total = 0;
        for (int step = 0; step < batch + cursorPrime; step++) {
            total += step % 7;
        }
        return total;
    }

    static int probeStep4(int policy, int brokerBeta) {
        if (policy > 0 && brokerBeta > 0 && policy + brokerBeta < 175) {
            return policy * brokerBeta;
        }
        if (policy != brokerBeta) {
            return policy - brokerBeta;
        }
        return 175;
    }
}
