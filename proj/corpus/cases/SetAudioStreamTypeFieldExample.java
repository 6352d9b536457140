package com.example.audio;

import android.media.AudioAttributes;
import android.media.AudioManager;
import android.media.MediaPlayer;

public class AudioPlayer {
    AudioAttributes.Builder builder = new AudioAttributes.Builder();
    AudioAttributes attributes = builder.build();
    private MediaPlayer mMediaPlayer;

    private void setAttributes() {
        if (android.os.Build.VERSION.SDK_INT >=
                android.os.Build.VERSION_CODES.LOLLIPOP) {
            mMediaPlayer.setAudioAttributes(attributes);
        } else {
            mMediaPlayer.setAudioStreamType(AudioManager.STREAM_MUSIC);
        }
    }
}
