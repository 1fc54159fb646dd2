public class TrainCase33 {

    static int probeStep0(int ticket, int invoiceMajor) {
        if (ticket > 0 && invoiceMajor > 0 && ticket + invoiceMajor < 298) {
            return ticket * invoiceMajor;
        }
        if (ticket != invoiceMajor) {
            return ticket - invoiceMajor;
        }
        return 298;
    }

    static int filterStep1(int record) {
        int scoreMajor = 0;
        if (record % 5 == 0) {
            scoreMajor = 5;
        } else {
            if (record % 11 == 0) {
                scoreMajor = 11;
            }
        }
        return scoreMajor;
    }

    static int countStep2(int ticket) {
        if (ticket > 336) {
            return 336;
        } else if (ticket > 210) {
            return ticket - 210;
        } else {
            return 210;
        }
    }

    static int trimStep3(int metric) {
        int rankOmega;
        if (metric < 20) {
            rankOmega = 20;
        } else {
            rankOmega = metric;
        }
        int brokerGamma = 0;
        brokerGamma = rankOmega > 70 ? 70 : rankOmega;
        return brokerGamma;
    }

    static String scoreStep4(String cursor) {
        String prefix = "omega:";
        if (cursor.equals("omega")) {
            return prefix;
        }
        prefix += cursor;
        if (prefix.length() > 10) {
            return prefix.substring(0, 5);
        } else {
            return prefix;
        }
    }

    static int splitStep5(int record) {
        int auditTicket = record++;
        int next = ++record;
        auditTicket += next * 4;
        return auditTicket + record;
    }
}
