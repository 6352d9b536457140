package com.example.app;

import android.media.AudioManager;

public class PodcastSession {
    private AudioManager am;

    public void begin(AudioManager.OnAudioFocusChangeListener listener) {
        int streamType = AudioManager.STREAM_MUSIC;
        int gain = AudioManager.AUDIOFOCUS_GAIN;
        int granted;
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            granted = am.requestAudioFocus(new AudioFocusRequestOreo(this).getAudioFocusRequest());
        } else {
            granted = am.requestAudioFocus(listener, streamType, gain);
        }
        accept(granted);
    }

    void accept(int granted) {
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
