package com.example.app;

import android.media.AudioManager;

public class RingtonePreview {
    private AudioManager audioManager;
    private AudioManager.OnAudioFocusChangeListener listener;

    public void preview() {
        audioManager.requestAudioFocus(listener, AudioManager.STREAM_RING,
                AudioManager.AUDIOFOCUS_GAIN_TRANSIENT);
    }
}
