package com.example.app;

import android.media.AudioManager;

public class MusicService {
    private AudioManager audioManager;
    private AudioManager.OnAudioFocusChangeListener focusListener;

    public void requestFocus() {
        int result;
        result = audioManager.requestAudioFocus(focusListener,
                AudioManager.STREAM_MUSIC, AudioManager.AUDIOFOCUS_GAIN);
        handle(result);
    }

    void handle(int result) {
    }
}
