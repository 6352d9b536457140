package com.example.clock;

import android.widget.TimePicker;

public class TimeSetter {
    public void setTimeH(TimePicker tp, int hour) {
        if (android.os.Build.VERSION.SDK_INT >=
                android.os.Build.VERSION_CODES.M) {
            tp.setHour(hour);
        } else {
            tp.setCurrentHour(hour);
        }
    }
}
