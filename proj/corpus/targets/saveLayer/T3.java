package com.example.app;

import android.graphics.Canvas;
import android.graphics.Paint;

public class ScratchLayer {
    private Paint brush;
    private int flags = 31;

    public void scratch(Canvas target, float width, float height) {
        target.saveLayer(0f, 0f, width, height, brush, flags);
    }
}
