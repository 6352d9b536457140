package com.example.app;

import android.telephony.TelephonyManager;

public class Fingerprint {
    public void collect(TelephonyManager tm) {
        String id;
        id = tm.getDeviceId();
        submit(id);
    }

    void submit(String id) {
    }
}
