package com.example.app;

import android.widget.TimePicker;

public class MinuteWriter {
    public void apply(TimePicker tp, int minute) {
        tp.setCurrentMinute(minute);
    }
}
