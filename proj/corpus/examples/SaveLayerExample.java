package com.example.paint;

import android.graphics.Canvas;
import android.graphics.Paint;

public class LayerCompositor {
    private Canvas mCanvas;

    public void composite(float left, float top, float right, float bottom,
            Paint paint, int saveFlags) {
        int checkpoint;
        if (android.os.Build.VERSION.SDK_INT >=
                android.os.Build.VERSION_CODES.LOLLIPOP) {
            checkpoint = mCanvas.saveLayer(left, top, right, bottom, paint);
        } else {
            checkpoint = mCanvas.saveLayer(left, top, right, bottom, paint, saveFlags);
        }
        restoreTo(checkpoint);
    }

    void restoreTo(int checkpoint) {
    }
}
