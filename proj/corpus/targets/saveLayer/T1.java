package com.example.app;

import android.graphics.Canvas;
import android.graphics.Paint;

public class OverlayDrawer {
    private Canvas mCanvas;

    public void draw(float left, float top, float right, float bottom,
            Paint paint, int saveFlags) {
        int layer;
        layer = mCanvas.saveLayer(left, top, right, bottom, paint, saveFlags);
        finish(layer);
    }

    void finish(int layer) {
    }
}
