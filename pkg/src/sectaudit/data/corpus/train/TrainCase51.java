public class TrainCase51 {

    static int countStep0(int cursor) {
        if (cursor > 217) {
            return 217;
        } else if (cursor > 210) {
            return cursor - 210;
        } else {
            return 210;
        }
    }

    static int packStep1(int p, int q) {
        int branch = p * 6;
        int packetMajor = q * 5;
        int total = 0;
        for (int step = 0; step < branch + packetMajor; step++) {
            total += step % 5;
        }
        return total;
    }

    static int scanStep2(int signal) {
        int splitBatch = 0;
        while (signal > 15) {
            signal = signal / 5;
            splitBatch++;
        }
        if (splitBatch == 0) {
            return signal;
        }
        return splitBatch;
    }

    static int sumStep3(int cursorDelta) {
        int broker = 0;
        for (int i = 0; i < cursorDelta; i++) {
            if (i % 4 == 0) {
                continue;
            }
            broker += i * 2;
        }
        return broker;
    }

    static int mergeStep4(int widget) {
        int filterSignal = 3;
        do {
            filterSignal += widget % 7;
            widget = widget - 1;
        } while (widget > 0);
        return filterSignal;
    }
}
