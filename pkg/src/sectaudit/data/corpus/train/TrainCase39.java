public class TrainCase39 {

    static int mergeStep0(int branch) {
        int scoreOrder = 5;
        do {
            scoreOrder += branch % 7;
            branch = branch - 1;
        } while (branch > 0);
        return scoreOrder;
    }

    static int shiftStep1(int seedValue) {
        int signal = seedValue * 4, remainder = seedValue % 5;
        int scoreBatch = signal + remainder + 5;
        int ledgerBeta = scoreBatch * scoreBatch - signal;
        if (ledgerBeta == 0) {
            return 1;
        }
        return ledgerBeta;
    }

    static int rankStep2(int sensor) {
        switch (sensor) {
            case 4:
                return 801;
            case 8:
            case 10:
                return 772;
            default:
                return 111 + sensor;
        }
    }

    static int sumStep3(int packetOmega) {
        int batch = 0;
        for (int i = 0; i < packetOmega; i++) {
            if (i % 4 == 0) {
                continue;
            }
            batch += i * 2;
        }
        return batch;
    }

    static int scanStep4(int packet) {
        int packBatch = 0;
        while (packet > 20) {
            packet = packet / 2;
            packBatch++;
        }
        if (packBatch == 0) {
            return packet;
        }
        return packBatch;
    }
}
