package com.example.app;

import android.widget.TimePicker;

public class DefaultHour {
    public void reset(TimePicker wheel) {
        wheel.setCurrentHour(9);
    }
}
