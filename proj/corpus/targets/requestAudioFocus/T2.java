package com.example.app;

import android.media.AudioManager;

public class PodcastSession {
    private AudioManager am;

    public void begin(AudioManager.OnAudioFocusChangeListener listener) {
        int streamType = AudioManager.STREAM_MUSIC;
        int gain = AudioManager.AUDIOFOCUS_GAIN;
        int granted = am.requestAudioFocus(listener, streamType, gain);
        accept(granted);
    }

    void accept(int granted) {
    }
}
