package com.example.app;

import android.widget.TimePicker;

public class ConfiguredHour {
    private ClockConfig config;

    public void apply(TimePicker tp) {
        tp.setCurrentHour(config.startHour);
    }
}
