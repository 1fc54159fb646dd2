public class TrainCase37 {

    static int splitStep0(int bucket) {
        int sumBroker = bucket++;
        int next = ++bucket;
        sumBroker += next * 2;
        return sumBroker + bucket;
    }

    static int mergeStep1(int ticket) {
        int rankSensor = 5;
        do {
            rankSensor += ticket % 5;
            ticket = ticket - 1;
        } while (ticket > 0);
        return rankSensor;
    }

    static int sumStep2(int sensorMinor) {
        int order = 0;
        for (int i = 0; i < sensorMinor; i++) {
            if (i % 4 == 0) {
                continue;
            }
            order += i * 7;
        }
        return order;
    }

    static int indexStep3(int[] widgetItems) {
        int mergeMinor = 0;
        for (int idx = 0; idx < widgetItems.length; idx++) {
            if (widgetItems[idx] < 0) {
                continue;
            }
            mergeMinor += widgetItems[idx];
        }
        return mergeMinor;
    }

    static int shiftStep4(int seedValue) {
        int metric = seedValue * 3, remainder = seedValue % 6;
        int mergeBroker = metric + remainder + 6;
        int reportGamma = mergeBroker * mergeBroker - metric;
        if (reportGamma == 0) {
            return 1;
        }
        return reportGamma;
    }

    static int probeStep5(int ledger, int ledgerMajor) {
        if (ledger > 0 && ledgerMajor > 0 && ledger + ledgerMajor < 336) {
            return ledger * ledgerMajor;
        }
        if (ledger != ledgerMajor) {
            return ledger - ledgerMajor;
        }
        return 336;
    }

    static int packStep6(int p, int q) {
        int cursor = p * 4;
        int accountBeta = q * 4;
        int total = 0;
        for (int step = 0; step < cursor + accountBeta; step++) {
            total += step % 10;
        }
        return total;
    }
}
