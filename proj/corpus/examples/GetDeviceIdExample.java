package com.example.device;

import android.telephony.TelephonyManager;

public class DeviceIdentity {
    private TelephonyManager telephonyManager;

    public String identify() {
        String id;
        if (android.os.Build.VERSION.SDK_INT >=
                android.os.Build.VERSION_CODES.O) {
            id = telephonyManager.getImei();
        } else {
            id = telephonyManager.getDeviceId();
        }
        return id;
    }
}
