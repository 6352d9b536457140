package com.example.app;

import android.telephony.TelephonyManager;

public class IdentityProvider {
    private TelephonyManager telephonyManager;

    public String deviceIdentity() {
        return telephonyManager.getDeviceId();
    }
}
