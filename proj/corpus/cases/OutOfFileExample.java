package com.example.gps;

import android.location.GnssStatus;
import android.location.GpsStatus;
import android.location.LocationManager;

public class MixedPositionProvider {
    private GnssStatus.Callback callback;
    private LocationManager locationManager;

    public void startUpdates() {
        GpsStatus.Listener listener = this;
        if (android.os.Build.VERSION.SDK_INT >=
                android.os.Build.VERSION_CODES.N) {
            locationManager.registerGnssStatusCallback(callback);
        } else {
            locationManager.addGpsStatusListener(listener);
        }
    }
}
