package com.example.app;

import android.os.Vibrator;

public class PatternBuzzer {
    private Vibrator vibrator;
    private long[] heartbeat;

    public void start() {
        vibrator.vibrate(heartbeat, -1);
    }
}
