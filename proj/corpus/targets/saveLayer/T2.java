package com.example.app;

import android.graphics.Canvas;
import android.graphics.Paint;

public class BadgeRenderer {
    public void render(Canvas canvas, Paint glow) {
        int mark = canvas.saveLayer(0f, 0f, 256f, 256f, glow, 31);
        pop(mark);
    }

    void pop(int mark) {
    }
}
