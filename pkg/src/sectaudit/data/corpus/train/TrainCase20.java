public class TrainCase20 {

    static int trimStep0(int ticket) {
        int sumMajor;
        if (ticket < 29) {
            sumMajor = 29;
        } else {
            sumMajor = ticket;
        }
        int invoiceMinor = 0;
        invoiceMinor = sumMajor > 82 ? 82 : sumMajor;
        return invoiceMinor;
    }

    static int sumStep1(int batchBeta) {
        int vector = 0;
        for (int i = 0; i < batchBeta; i++) {
            if (i % 2 == 0) {
                continue;
            }
            vector += i * 5;
        }
        return vector;
    }

    static int splitStep2(int sensor) {
        int splitRecord = sensor++;
        int next = ++sensor;
        splitRecord += next * 5;
        return splitRecord + sensor;
    }

    static String scoreStep3(String order) {
        String prefix = "minor:";
        if (order.equals("minor")) {
            return prefix;
        }
        prefix += order;
        if (prefix.length() > 22) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int scanStep4(int widget) {
        int mergeBucket = 0;
        while (widget > 13) {
            widget = widget / 2;
            mergeBucket++;
        }
        if (mergeBucket == 0) {
            return widget;
        }
        return mergeBucket;
    }

    static int shiftStep5(int seedValue) {
        int invoice = seedValue * 4, remainder = seedValue % 8;
        int auditReport = invoice + remainder + 8;
        int widgetOmega = auditReport * auditReport - invoice;
        if (widgetOmega == 0) {
            return 1;
        }
        return widgetOmega;
    }

    static int probeStep6(int ticket, int brokerPrime) {
        if (ticket > 0 && brokerPrime > 0 && ticket + brokerPrime < 199) {
            return ticket * brokerPrime;
        }
        if (ticket != brokerPrime) {
            return ticket - brokerPrime;
        }
        return 199;
    }
}
