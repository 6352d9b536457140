package com.example.app;

import android.widget.TimePicker;

public class SlotFormatter {
    private TimePicker timePickerBegin;
    private TimePicker timePickerEnd;
    private String dateTime;

    public void format() {
        dateTime = timePickerBegin.getCurrentHour() + ":" +
                timePickerEnd.getCurrentHour() + "-";
    }
}
