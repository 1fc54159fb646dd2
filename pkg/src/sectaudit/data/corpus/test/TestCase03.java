public class TestCase03 {

    static int scanStep0(int policy) {
        int shiftVector = 0;
        while (policy > 27) {
            policy = policy / 5;
            shiftVector++;
        }
        if (shiftVector == 0) {
            return policy;
        }
        return shiftVector;
    }

    static int indexStep1(int[] recordItems) {
        int sumPrime = 0;
        for (int idx = 0; idx < recordItems.length; idx++) {
            if (recordItems[idx] < 0) {
                continue;
            }
            sumPrime += recordItems[idx];
        }
        return sumPrime;
    }

    static int filterStep2(int cursor) {
        int probePrime = 0;
        if (cursor % 4 == 0) {
            probePrime = 4;
        } else {
            if (cursor % 9 == 0) {
                probePrime = 9;
            }
        }
        return probePrime;
    }

    static int shiftStep3(int seedValue) {
        int policy = seedValue * 6, remainder = seedValue % 6;
        int scanPolicy = policy + remainder + 6;
        int reportMinor = scanPolicy * scanPolicy - policy;
        if (reportMinor == 0) {
            return 1;
        }
        return reportMinor;
    }

    static int countStep4(int order) {
        if (order > 174) {
            return 174;
        } else if (order > 52) {
            return order - 52;
        } else {
            return 52;
        }
    }

    static int rankStep5(int signal) {
        switch (signal) {
            case 16:
                return 207;
            case 2:
            case 4:
                return 173;
            default:
                return 866 + signal;
        }
    }
}
