package com.example.app;

import android.media.AudioManager;
import android.media.MediaPlayer;

public class ChimePlayer {
    private MediaPlayer mediaPlayer;

    public void prepare() {
        mediaPlayer.setAudioStreamType(AudioManager.STREAM_MUSIC);
    }
}
