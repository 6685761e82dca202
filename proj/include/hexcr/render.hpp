#pragma once

// Text and SVG pictures of a periodic colouring over a window of brick
// rows and columns anchored at the origin.

#include <string>

#include "hexcr/coloring.hpp"

namespace hexcr {

enum class RenderFormat { Ascii, Svg };

struct Window {
    int rows = 0;
    int cols = 0;
};

/// Window::rows/cols of 0 mean "one fundamental domain". Throws
/// std::invalid_argument if the window is smaller than the domain.
[[nodiscard]] std::string render(const PeriodicColoring& c, RenderFormat format, Window window = {});

/// "RxC".
[[nodiscard]] Window parse_window(const std::string& text);

/// Fill colours, light to dark.
[[nodiscard]] const char* palette(int color);

}  // namespace hexcr
