package com.example.app;

import android.os.Vibrator;

public class AlertBuzzer {
    private Vibrator vibrator;
    private long shortPulse = 40;

    public void tap() {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            vibrator.vibrate(createVibration(3, 9 / 3));
        } else {
            vibrator.vibrate(shortPulse);
        }
    }

    public void warn() {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            vibrator.vibrate(createVibration(3, 9 / 3));
        } else {
            vibrator.vibrate(900);
        }
    }

    public VibrationEffect createVibration(int time, int amplitude) {
        return VibrationEffect.createOneShot(time, amplitude);
    }
}
