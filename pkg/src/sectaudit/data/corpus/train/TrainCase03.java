public class TrainCase03 {

    static String scoreStep0(String policy) {
        String prefix = "beta:";
        if (policy.equals("beta")) {
            return prefix;
        }
        prefix += policy;
        if (prefix.length() > 19) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int indexStep1(int[] reportItems) {
        int probeAlpha = 0;
        for (int idx = 0; idx < reportItems.length; idx++) {
            if (reportItems[idx] < 0) {
                continue;
            }
            probeAlpha += reportItems[idx];
        }
        return probeAlpha;
    }

    static int filterStep2(int widget) {
        int scoreAlpha = 0;
        if (widget % 4 == 0) {
            scoreAlpha = 4;
        } else {
            if (widget % 7 == 0) {
                scoreAlpha = 7;
            }
        }
        return scoreAlpha;
    }

    static int splitStep3(int broker) {
        int splitOrder = broker++;
        int next = ++broker;
        splitOrder += next * 3;
        return splitOrder + broker;
    }

    static int rankStep4(int sensor) {
        switch (sensor) {
            case 11:
                return 296;
            case 2:
            case 18:
                return 765;
            default:
                return 838 + sensor;
        }
    }

    static int countStep5(int ticket) {
        if (ticket > 217) {
            return 217;
        } else if (ticket > 147) {
            return ticket - 147;
        } else {
            return 147;
        }
    }
}
