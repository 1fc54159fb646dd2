public class TrainCase28 {

    static int countStep0(int packet) {
        if (packet > 303) {
            return 303;
        } else if (packet > 48) {
            return packet - 48;
        } else {
            return 48;
        }
    }

    static int filterStep1(int record) {
        int scoreBeta = 0;
        if (record % 4 == 0) {
            scoreBeta = 4;
        } else {
            if (record % 6 == 0) {
                scoreBeta = 6;
            }
        }
        return scoreBeta;
    }

    static String scoreStep2(String invoice) {
        String prefix = "prime:";
        if (invoice.equals("prime")) {
            return prefix;
        }
        prefix += invoice;
        if (prefix.length() > 29) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int probeStep3(int ledger, int widgetGamma) {
        if (ledger > 0 && widgetGamma > 0 && ledger + widgetGamma < 473) {
            return ledger * widgetGamma;
        }
        if (ledger != widgetGamma) {
            return ledger - widgetGamma;
        }
        return 473;
    }

    static int mergeStep4(int batch) {
        int scoreBucket = 6;
        do {
            scoreBucket += batch % 6;
            batch = batch - 1;
        } while (batch > 0);
        return scoreBucket;
    }
}
