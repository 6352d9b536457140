package com.example.app;

import android.widget.TimePicker;

public class ScheduleForm {
    private TimePicker startPicker;
    private TimePicker endPicker;

    public void saveStart() {
        int startHour;
        startHour = startPicker.getCurrentHour();
        persist(startHour);
    }

    public void saveEnd() {
        int endHour;
        endHour = endPicker.getCurrentHour();
        persist(endHour);
    }

    void persist(int hour) {
    }
}
