package com.example.clock;

import android.widget.TimePicker;

public class ClockMinuteReader {
    public int readMinute(TimePicker picker) {
        int minutes;
        if (android.os.Build.VERSION.SDK_INT >=
                android.os.Build.VERSION_CODES.M) {
            minutes = picker.getMinute();
        } else {
            minutes = picker.getCurrentMinute();
        }
        return minutes;
    }
}
