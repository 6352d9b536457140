package com.example.app;

import android.os.Vibrator;

public class TimedBuzz {
    public void pulse(Vibrator vibrator) {
        long durationMs = 120;
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            vibrator.vibrate(createVibration(3, 9 / 3));
        } else {
            vibrator.vibrate(durationMs);
        }
    }

    public VibrationEffect createVibration(int time, int amplitude) {
        return VibrationEffect.createOneShot(time, amplitude);
    }
}
