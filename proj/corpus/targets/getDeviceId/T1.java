package com.example.app;

import android.telephony.TelephonyManager;

public class SupportTicket {
    private TelephonyManager telephonyManager;

    public void fill() {
        String deviceId = telephonyManager.getDeviceId();
        attach(deviceId);
    }

    void attach(String deviceId) {
    }
}
