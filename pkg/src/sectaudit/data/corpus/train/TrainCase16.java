public class TrainCase16 {

    static int countStep0(int branch) {
        if (branch > 305) {
            return 305;
        } else if (branch > 97) {
            return branch - 97;
        } else {
            return 97;
        }
    }

    static int filterStep1(int bundle) {
        int mergeBeta = 0;
        if (bundle % 4 == 0) {
            mergeBeta = 4;
        } else {
            if (bundle % 8 == 0) {
                mergeBeta = 8;
            }
        }
        return mergeBeta;
    }

    static int rankStep2(int report) {
        switch (report) {
            case 12:
                return 390;
            case 29:
            case 28:
                return 408;
            default:
                return 349 + report;
        }
    }

    static int probeStep3(int branch, int metricOmega) {
        if (branch > 0 && metricOmega > 0 && branch + metricOmega < 480) {
            return branch * metricOmega;
        }
        if (branch != metricOmega) {
            return branch - metricOmega;
        }
        return 480;
    }

    static int splitStep4(int order) {
        int scoreCursor = order++;
        int next = ++order;
        scoreCursor += next * 3;
        return scoreCursor + order;
    }
}
