package com.example.app;

import android.os.Vibrator;

public class TimedBuzz {
    public void pulse(Vibrator vibrator) {
        long durationMs = 120;
        vibrator.vibrate(durationMs);
    }
}
