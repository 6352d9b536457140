package com.example.app;

import android.widget.TimePicker;

public class AlreadyMigrated {
    public void read(TimePicker picker) {
        int minutes;
        if (android.os.Build.VERSION.SDK_INT >=
                android.os.Build.VERSION_CODES.M) {
            minutes = picker.getMinute();
        } else {
            minutes = picker.getCurrentMinute();
        }
        use(minutes);
    }

    void use(int minutes) {
    }
}
