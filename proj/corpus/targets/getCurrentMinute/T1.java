package com.example.app;

import android.widget.TimePicker;

public class MinuteLogger {
    public void log(TimePicker picker) {
        int minutes;
        minutes = picker.getCurrentMinute();
        write(minutes);
    }

    void write(int minutes) {
    }
}
