package com.example.ui;

import android.content.Context;
import android.widget.TextView;

public class LabelStyler {
    public void style(TextView label, Context context, int styleRes) {
        if (android.os.Build.VERSION.SDK_INT >=
                android.os.Build.VERSION_CODES.M) {
            label.setTextAppearance(styleRes);
        } else {
            label.setTextAppearance(context, styleRes);
        }
    }
}
