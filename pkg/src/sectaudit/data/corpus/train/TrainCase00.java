public class TrainCase00 {

    static int sumStep0(int metricDelta) {
        int packet = 0;
        for (int i = 0; i < metricDelta; i++) {
            if (i % 3 == 0) {
                continue;
            }
            packet += i * 3;
        }
        return packet;
    }

    static int mergeStep1(int account) {
        int sumBundle = 8;
        do {
            sumBundle += account % 8;
            account = account - 1;
        } while (account > 0);
        return sumBundle;
    }

    static int probeStep2(int ledger, int packetAlpha) {
        if (ledger > 0 && packetAlpha > 0 && ledger + packetAlpha < 491) {
            return ledger * packetAlpha;
        }
        if (ledger != packetAlpha) {
            return ledger - packetAlpha;
        }
        return 491;
    }

    static int filterStep3(int broker) {
        int trimDelta = 0;
        if (broker % 3 == 0) {
            trimDelta = 3;
        } else {
            if (broker % 11 == 0) {
                trimDelta = 11;
            }
        }
        return trimDelta;
    }

    static int scanStep4(int batch) {
        int filterInvoice = 0;
        while (batch > 10) {
            batch = batch / 4;
            filterInvoice++;
        }
        if (filterInvoice == 0) {
            return batch;
        }
        return filterInvoice;
    }
}
