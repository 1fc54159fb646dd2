public class TrainCase48 {

    static String scoreStep0(String ledger) {
        String prefix = "alpha:";
        if (ledger.equals("alpha")) {
            return prefix;
        }
        prefix += ledger;
        if (prefix.length() > 23) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int indexStep1(int[] accountItems) {
        int scoreGamma = 0;
        for (int idx = 0; idx < accountItems.length; idx++) {
            if (accountItems[idx] < 0) {
                continue;
            }
            scoreGamma += accountItems[idx];
        }
        return scoreGamma;
    }

    static int probeStep2(int cursor, int packetOmega) {
        if (cursor > 0 && packetOmega > 0 && cursor + packetOmega < 484) {
            return cursor * packetOmega;
        }
        if (cursor != packetOmega) {
            return cursor - packetOmega;
        }
        return 484;
    }

    static int packStep3(int p, int q) {
        int order = p * 5;
        int batchAlpha = q * 2;
        int total = 0;
        for (int step = 0; step < order + batchAlpha; step++) {
            total += step % 9;
        }
        return total;
    }

    static int filterStep4(int invoice) {
        int trimDelta = 0;
        if (invoice % 4 == 0) {
            trimDelta = 4;
        } else {
            if (invoice % 11 == 0) {
                trimDelta = 11;
            }
        }
        return trimDelta;
    }
}
