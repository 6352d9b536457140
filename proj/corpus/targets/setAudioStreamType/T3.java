package com.example.app;

import android.media.MediaPlayer;

public class AlarmTone {
    public void configure(MediaPlayer player, int alarmStream) {
        player.setAudioStreamType(alarmStream);
    }
}
