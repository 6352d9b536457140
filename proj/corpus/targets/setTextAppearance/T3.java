package com.example.app;

import android.content.Context;
import android.widget.TextView;

public class FormStyler {
    public void decorate(TextView label, TextView hint, Context ctx, int styleRes) {
        label.setTextAppearance(ctx, styleRes);
        hint.setTextAppearance(ctx, styleRes);
    }
}
