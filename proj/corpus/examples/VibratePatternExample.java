package com.example.buzz;

import android.os.VibrationEffect;
import android.os.Vibrator;

public class WaveformPlayer {
    public void run(Vibrator vibrator, long[] timings, int repeatIndex) {
        if (android.os.Build.VERSION.SDK_INT >=
                android.os.Build.VERSION_CODES.O) {
            vibrator.vibrate(VibrationEffect.createWaveform(timings, repeatIndex));
        } else {
            vibrator.vibrate(timings, repeatIndex);
        }
    }
}
