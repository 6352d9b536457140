package com.example.app;

import android.os.Vibrator;

public class AlertBuzzer {
    private Vibrator vibrator;
    private long shortPulse = 40;

    public void tap() {
        vibrator.vibrate(shortPulse);
    }

    public void warn() {
        vibrator.vibrate(900);
    }
}
