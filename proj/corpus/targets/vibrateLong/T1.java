package com.example.app;

import android.os.Vibrator;

public class BuzzOnSave {
    private Vibrator vibrator;

    public void notifyUser() {
        vibrator.vibrate(500);
    }
}
