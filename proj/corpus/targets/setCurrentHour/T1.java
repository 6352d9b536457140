package com.example.app;

import android.widget.TimePicker;

public class HourWriter {
    public void apply(TimePicker tp, int hour) {
        tp.setCurrentHour(hour);
    }
}
