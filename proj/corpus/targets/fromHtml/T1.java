package com.example.app;

import android.text.Html;
import android.text.Spanned;

public class ArticleView {
    public void show(String body) {
        Spanned rendered = Html.fromHtml(body);
        display(rendered);
    }

    void display(Spanned rendered) {
    }
}
