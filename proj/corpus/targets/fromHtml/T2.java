package com.example.app;

import android.text.Html;
import android.text.Spanned;

public class TitleBanner {
    private String headline = "<h2>Title</h2><br>";

    public void refresh() {
        Spanned span;
        span = Html.fromHtml(headline);
        show(span);
    }

    void show(Spanned span) {
    }
}
