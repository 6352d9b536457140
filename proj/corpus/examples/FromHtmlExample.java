package com.example.html;

import android.text.Html;
import android.text.Spanned;

public class HtmlRenderer {
    public void render(String source) {
        if (android.os.Build.VERSION.SDK_INT >=
                android.os.Build.VERSION_CODES.N) {
            Spanned styled = Html.fromHtml(source, Html.FROM_HTML_MODE_LEGACY);
        } else {
            Spanned styled = Html.fromHtml(source);
        }
    }
}
