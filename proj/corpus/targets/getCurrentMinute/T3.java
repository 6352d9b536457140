package com.example.app;

import android.widget.TimePicker;

public class RangeForm {
    public void capture(TimePicker beginPicker, TimePicker endPicker) {
        int begin;
        int end;
        begin = beginPicker.getCurrentMinute();
        end = endPicker.getCurrentMinute();
        record(begin, end);
    }

    void record(int begin, int end) {
    }
}
