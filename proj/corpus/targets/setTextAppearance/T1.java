package com.example.app;

import android.widget.TextView;

public class HeaderStyler {
    public void decorate(TextView title) {
        title.setTextAppearance(this, R.style.Header);
    }
}
