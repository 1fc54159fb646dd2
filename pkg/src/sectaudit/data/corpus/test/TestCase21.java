public class TestCase21 {

    static int probeStep0(int invoice, int ticketBeta) {
        if (invoice > 0 && ticketBeta > 0 && invoice + ticketBeta < 444) {
            return invoice * ticketBeta;
        }
        if (invoice != ticketBeta) {
            return invoice - ticketBeta;
        }
        return 444;
    }

    static int indexStep1(int[] brokerItems) {
        int filterAlpha = 0;
        for (int idx = 0; idx < brokerItems.length; idx++) {
            if (brokerItems[idx] < 0) {
                continue;
            }
            filterAlpha += brokerItems[idx];
        }
        return filterAlpha;
    }

    static int splitStep2(int broker) {
        int routeCursor = broker++;
        int next = ++broker;
        routeCursor += next * 2;
        return routeCursor + broker;
    }

    static int shiftStep3(int seedValue) {
        int packet = seedValue * 7, remainder = seedValue % 4;
        int probeCursor = packet + remainder + 4;
        int signalPrime = probeCursor * probeCursor - packet;
        if (signalPrime == 0) {
            return 1;
        }
        return signalPrime;
    }

    static int filterStep4(int sensor) {
        int indexBeta = 0;
        if (sensor % 3 == 0) {
            indexBeta = 3;
        } else {
            if (sensor % 7 == 0) {
                indexBeta = 7;
            }
        }
        return indexBeta;
    }

    static String scoreStep5(String cursor) {
        String prefix = "major:";
        if (cursor.equals("major")) {
            return prefix;
        }
        prefix += cursor;
        if (prefix.length() > 25) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }
}
