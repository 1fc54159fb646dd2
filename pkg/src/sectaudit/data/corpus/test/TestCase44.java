public class TestCase44 {

    static int splitStep0(int sensor) {
        int scorePacket = sensor++;
        int next = ++sensor;
        scorePacket += next * 6;
        return scorePacket + sensor;
    }

    static int shiftStep1(int seedValue) {
        int vector = seedValue * 7, remainder = seedValue % 7;
        int scorePacket = vector + remainder + 7;
        int cursorOmega = scorePacket * scorePacket - vector;
        if (cursorOmega == 0) {
            return 1;
        }
        return cursorOmega;
    }

    static int trimStep2(int bundle) {
        int countMinor;
        if (bundle < 29) {
            countMinor = 29;
        } else {
            countMinor = bundle;
        }
        int branchAlpha = 0;
        branchAlpha = countMinor > 114 ? 114 : countMinor;
        return branchAlpha;
    }

    static int rankStep3(int signal) {
        switch (signal) {
            case 12:
                return 868;
            case 2:
            case 27:
                return 582;
            default:
                return 660 + signal;
        }
    }

    static int scanStep4(int ticket) {
        int splitMetric = 0;
        while (ticket > 28) {
            ticket = ticket / 4;
            splitMetric++;
        }
        if (splitMetric == 0) {
            return ticket;
        }
        return splitMetric;
    }
}
