package com.example.app;

import android.widget.TimePicker;

public class AlarmEditor {
    public void snapshot(TimePicker picker) {
        int hour = picker.getCurrentHour();
        store(hour);
    }

    void store(int hour) {
    }
}
