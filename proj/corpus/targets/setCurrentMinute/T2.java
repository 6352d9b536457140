package com.example.app;

import android.widget.TimePicker;

public class QuarterSnapper {
    public void snap(TimePicker tp, int quarter) {
        tp.setCurrentMinute(quarter);
        tp.setCurrentMinute(0);
    }
}
