package com.example.paint;

import android.graphics.Canvas;
import android.graphics.Paint;

public class WrappedCompositor {
    private Canvas mCanvas;
    private int tempFunctionReturnValue;

    public int saveLayer(float left, float top, float right, float bottom,
            Paint paint, int saveFlags) {
        if (android.os.Build.VERSION.SDK_INT >= 21) {
            tempFunctionReturnValue = mCanvas.saveLayer(left, top, right,
                    bottom, paint);
        } else {
            tempFunctionReturnValue = mCanvas.saveLayer(left, top, right,
                    bottom, paint, saveFlags);
        }
        return tempFunctionReturnValue;
    }
}
