public class TrainCase18 {

    static int trimStep0(int broker) {
        int probeMinor;
        if (broker < 12) {
            probeMinor = 12;
        } else {
            probeMinor = broker;
        }
        int ticketMinor = 0;
        ticketMinor = probeMinor > 87 ? 87 : probeMinor;
        return ticketMinor;
    }

    static int packStep1(int p, int q) {
        int account = p * 4;
        int branchMinor = q * 2;
        int total = 0;
        for (int step = 0; step < account + branchMinor; step++) {
            total += step % 6;
        }
        return total;
    }

    static int rankStep2(int ticket) {
        switch (ticket) {
            case 11:
                return 549;
            case 20:
            case 16:
                return 313;
            default:
                return 65 + ticket;
        }
    }

    static int shiftStep3(int seedValue) {
        int account = seedValue * 3, remainder = seedValue % 8;
        int auditTicket = account + remainder + 8;
        int reportBeta = auditTicket * auditTicket - account;
        if (reportBeta == 0) {
            return 1;
        }
        return reportBeta;
    }

    static int probeStep4(int invoice, int vectorMinor) {
        if (invoice > 0 && vectorMinor > 0 && invoice + vectorMinor < 444) {
            return invoice * vectorMinor;
        }
        if (invoice != vectorMinor) {
            return invoice - vectorMinor;
        }
        return 444;
    }

    static int splitStep5(int packet) {
        int sumRecord = packet++;
        int next = ++packet;
        sumRecord += next * 6;
        return sumRecord + packet;
    }

    static int scanStep6(int packet) {
        int mergeSensor = 0;
        while (packet > 6) {
            packet = packet / 3;
            mergeSensor++;
        }
        if (mergeSensor == 0) {
            return packet;
        }
        return mergeSensor;
    }
}
