package com.example.app;

import android.widget.TimePicker;

public class ReminderForm {
    private TimePicker picker;

    public void submit() {
        int minute = this.picker.getCurrentMinute();
        queue(minute);
    }

    void queue(int minute) {
    }
}
