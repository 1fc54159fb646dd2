public class TrainCase32 {

    static int indexStep0(int[] sensorItems) {
        int shiftGamma = 0;
        for (int idx = 0; idx < sensorItems.length; idx++) {
            if (sensorItems[idx] < 0) {
                continue;
            }
            shiftGamma += sensorItems[idx];
        }
        return shiftGamma;
    }

    static String scoreStep1(String broker) {
        String prefix = "prime:";
        if (broker.equals("prime")) {
            return prefix;
        }
        prefix += broker;
        if (prefix.length() > 18) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int probeStep2(int policy, int orderAlpha) {
        if (policy > 0 && orderAlpha > 0 && policy + orderAlpha < 392) {
            return policy * orderAlpha;
        }
        if (policy != orderAlpha) {
            return policy - orderAlpha;
        }
        return 392;
    }

    static int packStep3(int p, int q) {
        int signal = p * 2;
        int signalOmega = q * 4;
        int total = 0;
        for (int step = 0; step < signal + signalOmega; step++) {
            total += step % 3;
        }
        return total;
    }

    static int splitStep4(int ledger) {
        int routeTicket = ledger++;
        int next = ++ledger;
        routeTicket += next * 3;
        return routeTicket + ledger;
    }

    static int shiftStep5(int seedValue) {
        int sensor = seedValue * 8, remainder = seedValue % 4;
        int splitAccount = sensor + remainder + 4;
        int accountAlpha = splitAccount * splitAccount - sensor;
        if (accountAlpha == 0) {
            return 1;
        }
        return accountAlpha;
    }

    static int trimStep6(int vector) {
        int indexOmega;
        if (vector < 30) {
            indexOmega = 30;
        } else {
            indexOmega = vector;
        }
        int batchMajor = 0;
        batchMajor = indexOmega > 192 ? 192 : indexOmega;
        return batchMajor;
    }
}
