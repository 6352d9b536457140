package com.example.paint;

import android.graphics.Canvas;
import android.graphics.Paint;

public class WrappedCompositor {
    private Canvas mCanvas;
    private int tempFunctionReturnValue;

    public int saveLayer(float left, float top, float right, float bottom,
            Paint paint, int saveFlags) {
        float parameterVariable0 = left;
        float parameterVariable1 = top;
        float parameterVariable2 = right;
        float parameterVariable3 = bottom;
        Paint parameterVariable4 = paint;
        int parameterVariable5 = saveFlags;
        Canvas classNameVariable = mCanvas;
        if (android.os.Build.VERSION.SDK_INT >= 21) {
            tempFunctionReturnValue = classNameVariable.saveLayer(parameterVariable0,
                    parameterVariable1, parameterVariable2, parameterVariable3,
                    parameterVariable4);
        } else {
            tempFunctionReturnValue = classNameVariable.saveLayer(parameterVariable0,
                    parameterVariable1, parameterVariable2, parameterVariable3,
                    parameterVariable4, parameterVariable5);
        }
        return tempFunctionReturnValue;
    }
}
