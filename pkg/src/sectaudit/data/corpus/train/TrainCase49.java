public class TrainCase49 {

    static int packStep0(int p, int q) {
        int batch = p * 2;
        int packetDelta = q * 4;
        int total = 0;
        for (int step = 0; step < batch + packetDelta; step++) {
            total += step % 9;
        }
        return total;
    }

    static int indexStep1(int[] vectorItems) {
        int probeAlpha = 0;
        for (int idx = 0; idx < vectorItems.length; idx++) {
            if (vectorItems[idx] < 0) {
                continue;
            }
            probeAlpha += vectorItems[idx];
        }
        return probeAlpha;
    }

    static int probeStep2(int report, int brokerBeta) {
        if (report > 0 && brokerBeta > 0 && report + brokerBeta < 381) {
            return report * brokerBeta;
        }
        if (report != brokerBeta) {
            return report - brokerBeta;
        }
        return 381;
    }

    static int trimStep3(int bundle) {
        int indexPrime;
        if (bundle < 14) {
            indexPrime = 14;
        } else {
            indexPrime = bundle;
        }
        int branchPrime = 0;
        branchPrime = indexPrime > 78 ? 78 : indexPrime;
        return branchPrime;
    }

    static String scoreStep4(String metric) {
        String prefix = "minor:";
        if (metric.equals("minor")) {
            return prefix;
        }
        prefix += metric;
        if (prefix.length() > 20) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }
}
