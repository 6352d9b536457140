package com.example.app;

import android.os.Vibrator;

public class LoopingBuzzer {
    public void loop(Vibrator vibrator, long[] cadence, int repeatFrom) {
        vibrator.vibrate(cadence, repeatFrom);
    }
}
