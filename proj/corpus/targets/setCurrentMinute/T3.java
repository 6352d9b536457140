package com.example.app;

import android.widget.TimePicker;

public class MinutePresets {
    private int preset = 30;

    public void toPreset(TimePicker dial) {
        dial.setCurrentMinute(preset);
    }
}
