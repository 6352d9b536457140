package com.example.app;

import android.content.Context;
import android.widget.TextView;

public class CaptionStyler {
    public void decorate(TextView caption, Context context, int captionStyle) {
        caption.setTextAppearance(context, captionStyle);
    }
}
