package com.example.audio;

import android.media.AudioFocusRequest;
import android.media.AudioManager;

public class AudioFocusPlayer {
    private AudioManager audioManager;
    AudioFocusRequestOreo audioFocusRequestOreo = new AudioFocusRequestOreo(this);

    public void tryToGetAudioFocus() {
        AudioManager.OnAudioFocusChangeListener listener = this;
        int result;
        int type = AudioManager.STREAM_MUSIC;
        int duration = AudioManager.AUDIOFOCUS_GAIN;
        if (android.os.Build.VERSION.SDK_INT >=
                android.os.Build.VERSION_CODES.O) {
            AudioFocusRequest request = audioFocusRequestOreo.getAudioFocusRequest();
            result = audioManager.requestAudioFocus(request);
        } else {
            result = audioManager.requestAudioFocus(listener, type, duration);
        }
    }

    private class AudioFocusRequestOreo {
        private AudioFocusRequest audioFocusRequest;

        public AudioFocusRequestOreo(AudioManager.OnAudioFocusChangeListener listener) {
            audioFocusRequest = null;
        }

        public AudioFocusRequest getAudioFocusRequest() {
            return audioFocusRequest;
        }
    }
}
