package com.example.clock;

import android.widget.TimePicker;

public class MinuteSetter {
    public void setTimeM(TimePicker tp, int minute) {
        if (android.os.Build.VERSION.SDK_INT >=
                android.os.Build.VERSION_CODES.M) {
            tp.setMinute(minute);
        } else {
            tp.setCurrentMinute(minute);
        }
    }
}
