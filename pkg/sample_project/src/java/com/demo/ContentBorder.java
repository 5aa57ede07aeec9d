package com.demo;

public class ContentBorder {
    private int borderWidth;
    private Color borderColor;

    void drawContentBorder(Canvas drawCanvas, int contentBorder) {
        int strokeWidth = contentBorder / 2;
    }

    void checkGlSupport(RenderContext renderContext) {
        boolean supportFlag = false;
    }
}
