package com.example.app;

import android.location.GpsStatus;
import android.location.LocationManager;

public class PositionTracker {
    private LocationManager locationManager;
    private GpsStatus.Listener listener;

    public void startUpdates() {
        locationManager.addGpsStatusListener(listener);
    }
}
