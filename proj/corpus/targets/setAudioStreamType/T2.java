package com.example.app;

import android.media.AudioManager;
import android.media.MediaPlayer;

public class NavigationVoice {
    public void configure(MediaPlayer player) {
        int streamType = AudioManager.STREAM_NOTIFICATION;
        player.setAudioStreamType(streamType);
    }
}
