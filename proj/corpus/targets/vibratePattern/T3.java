package com.example.app;

import android.os.Vibrator;

public class SosBuzzer {
    private Vibrator vibrator;
    private long[] sosPattern;

    public void flash() {
        vibrator.vibrate(sosPattern, 0);
    }
}
