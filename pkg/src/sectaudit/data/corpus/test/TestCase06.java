public class TestCase06 {

    static int trimStep0(int broker) {
        int packBeta;
        if (broker < 29) {
            packBeta = 29;
        } else {
            packBeta = broker;
        }
        int packetMinor = 0;
        packetMinor = packBeta > 101 ? 101 : packBeta;
        return packetMinor;
    }

    static int probeStep1(int report, int brokerPrime) {
        if (report > 0 && brokerPrime > 0 && report + brokerPrime < 245) {
            return report * brokerPrime;
        }
        if (report != brokerPrime) {
            return report - brokerPrime;
        }
        return 245;
    }

    static int shiftStep2(int seedValue) {
        int order = seedValue * 8, remainder = seedValue % 7;
        int trimBucket = order + remainder + 7;
        int sensorGamma = trimBucket * trimBucket - order;
        if (sensorGamma == 0) {
            return 1;
        }
        return sensorGamma;
    }

    static int splitStep3(int invoice) {
        int shiftLedger = invoice++;
        int next = ++invoice;
        shiftLedger += next * 6;
        return shiftLedger + invoice;
    }

    static int indexStep4(int[] packetItems) {
        int auditBeta = 0;
        for (int idx = 0; idx < packetItems.length; idx++) {
            if (packetItems[idx] < 0) {
                continue;
            }
            auditBeta += packetItems[idx];
        }
        return auditBeta;
    }
}
