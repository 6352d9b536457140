package com.example.app;

import android.os.Vibrator;

public class BuzzOnSave {
    private Vibrator vibrator;

    public void notifyUser() {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            vibrator.vibrate(createVibration(3, 9 / 3));
        } else {
            vibrator.vibrate(500);
        }
    }

    public VibrationEffect createVibration(int time, int amplitude) {
        return VibrationEffect.createOneShot(time, amplitude);
    }
}
