package com.example.app;

import android.media.AudioManager;

public class RingtonePreview {
    private AudioManager audioManager;
    private AudioManager.OnAudioFocusChangeListener listener;

    public void preview() {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            audioManager.requestAudioFocus(new AudioFocusRequestOreo(this).getAudioFocusRequest());
        } else {
            audioManager.requestAudioFocus(listener, AudioManager.STREAM_RING, AudioManager.AUDIOFOCUS_GAIN_TRANSIENT);
        }
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
