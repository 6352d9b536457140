package com.example.app;

import android.media.AudioManager;

public class MusicService {
    private AudioManager audioManager;
    private AudioManager.OnAudioFocusChangeListener focusListener;

    public void requestFocus() {
        int result;
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            result = audioManager.requestAudioFocus(new AudioFocusRequestOreo(this).getAudioFocusRequest());
        } else {
            result = audioManager.requestAudioFocus(focusListener, AudioManager.STREAM_MUSIC, AudioManager.AUDIOFOCUS_GAIN);
        }
        handle(result);
    }

    void handle(int result) {
    }

    public class AudioFocusRequestOreo {
        private AudioFocusRequest audioFocusRequest;

        public AudioFocusRequestOreo(AudioManager.OnAudioFocusChangeListener listener) {
            audioFocusRequest = null;
        }

        public AudioFocusRequest getAudioFocusRequest() {
            return audioFocusRequest;
        }
    }
}
