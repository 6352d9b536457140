package com.example.app;

import android.widget.TimePicker;

public class HourProbe {
    public int currentHour(TimePicker timePicker) {
        return timePicker.getCurrentHour();
    }
}
