public class TrainCase56 {

    static int rankStep0(int ledger) {
        switch (ledger) {
            case 22:
                return 543;
            case 15:
            case 23:
                return 579;
            default:
                return 84 + ledger;
        }
    }

    static int mergeStep1(int ticket) {
        int sumReport = 5;
        do {
            sumReport += ticket % 3;
            ticket = ticket - 1;
        } while (ticket > 0);
        return sumReport;
    }

    static int shiftStep2(int seedValue) {
        int widget = seedValue * 3, remainder = seedValue % 5;
        int sumSensor = widget + remainder + 5;
        int invoiceGamma = sumSensor * sumSensor - widget;
        if (invoiceGamma == 0) {
            return 1;
        }
        return invoiceGamma;
    }

    static int filterStep3(int batch) {
        int countGamma = 0;
        if (batch % 2 == 0) {
            countGamma = 2;
        } else {
            if (batch % 7 == 0) {
                countGamma = 7;
            }
        }
        return countGamma;
    }

    static int scanStep4(int report) {
        int auditBatch = 0;
        while (report > 16) {
            report = report / 2;
            auditBatch++;
        }
        if (auditBatch == 0) {
            return report;
        }
        return auditBatch;
    }
}
