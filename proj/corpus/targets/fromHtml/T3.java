package com.example.app;

import android.text.Html;

public class PrefetchWarmup {
    public void warm(String cached) {
        Html.fromHtml(cached);
    }
}
