package com.example.clock;

import android.widget.TimePicker;

public class ClockHourReader {
    public int readHour(TimePicker picker) {
        int hour;
        if (android.os.Build.VERSION.SDK_INT >=
                android.os.Build.VERSION_CODES.M) {
            hour = picker.getHour();
        } else {
            hour = picker.getCurrentHour();
        }
        return hour;
    }
}
