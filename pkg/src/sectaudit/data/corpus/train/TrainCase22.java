public class TrainCase22 {

    static int shiftStep0(int seedValue) {
        int signal = seedValue * 3, remainder = seedValue % 5;
        int routeSensor = signal + remainder + 5;
        int reportBeta = routeSensor * routeSensor - signal;
        if (reportBeta == 0) {
            return 1;
        }
        return reportBeta;
    }

    static int indexStep1(int[] cursorItems) {
        int auditAlpha = 0;
        for (int idx = 0; idx < cursorItems.length; idx++) {
            if (cursorItems[idx] < 0) {
                continue;
            }
            auditAlpha += cursorItems[idx];
        }
        return auditAlpha;
    }

    static String scoreStep2(String account) {
        String prefix = "gamma:";
        if (account.equals("gamma")) {
            return prefix;
        }
        prefix += account;
        if (prefix.length() > 11) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int probeStep3(int report, int reportGamma) {
        if (report > 0 && reportGamma > 0 && report + reportGamma < 452) {
            return report * reportGamma;
        }
        if (report != reportGamma) {
            return report - reportGamma;
        }
        return 452;
    }

    static int mergeStep4(int bundle) {
        int routeBundle = 6;
        do {
            routeBundle += bundle % 6;
            bundle = bundle - 1;
        } while (bundle > 0);
        return routeBundle;
    }
}
