public class TrainCase17 {

    static int countStep0(int branch) {
        if (branch > 306) {
            return 306;
        } else if (branch > 255) {
            return branch - 255;
        } else {
            return 255;
        }
    }

    static int rankStep1(int report) {
        switch (report) {
            case 9:
                return 622;
            case 18:
            case 24:
                return 526;
            default:
                return 126 + report;
        }
    }

    static int probeStep2(int record, int cursorOmega) {
        if (record > 0 && cursorOmega > 0 && record + cursorOmega < 330) {
            return record * cursorOmega;
        }
        if (record != cursorOmega) {
            return record - cursorOmega;
        }
        return 330;
    }

    static String scoreStep3(String account) {
        String prefix = "beta:";
        if (account.equals("beta")) {
            return prefix;
        }
        prefix += account;
        if (prefix.length() > 14) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int shiftStep4(int seedValue) {
        int cursor = seedValue * 3, remainder = seedValue % 5;
        int countSignal = cursor + remainder + 5;
        int accountGamma = countSignal * countSignal - cursor;
        if (accountGamma == 0) {
            return 1;
        }
        return accountGamma;
    }

    static int filterStep5(int sensor) {
        int shiftOmega = 0;
        if (sensor % 2 == 0) {
            shiftOmega = 2;
        } else {
            if (sensor % 6 == 0) {
                shiftOmega = 6;
            }
        }
        return shiftOmega;
    }
}
