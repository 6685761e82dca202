#include "hexcr/render.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hexcr {

namespace {

constexpr std::array<const char*, kMaxColors> kPalette{"#fffbe6", "#fde9a9", "#fbd56b", "#f6b03c", "#e98a23",
                                                       "#cf6316", "#a8430f", "#7c2c0b", "#4f1c08", "#261005"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// Honeycomb geometry with unit edges: Z edges vertical, X/Y edges slanted.
struct Point {
    double x, y;
};

Point position(Node n) {
    const double sqrt3 = std::sqrt(3.0);
    return {n.c * sqrt3 / 2.0, 1.5 * n.r - (n.even() ? 0.0 : 0.5)};
}

std::string render_svg(const PeriodicColoring& c, Window w) {
    constexpr double kScale = 24.0;
    constexpr double kCell = 0.42;  // hexagon circumradius, in edge lengths
    const double sqrt3 = std::sqrt(3.0);
    const double margin = 1.0;
    const double width = (w.cols - 1) * sqrt3 / 2.0 + 2 * margin;
    const double height = 1.5 * (w.rows - 1) + 0.5 + 2 * margin;
    auto sx = [&](double x) { return fmt((x + margin) * kScale); };
    auto sy = [&](double y) { return fmt((y + margin + 0.5) * kScale); };

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width * kScale) + "\" height=\"" +
           fmt(height * kScale) + "\" viewBox=\"0 0 " + fmt(width * kScale) + " " + fmt(height * kScale) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    out += "<g stroke=\"#555555\" stroke-width=\"1.5\">\n";
    for (int r = 0; r < w.rows; ++r) {
        for (int col = 0; col < w.cols; ++col) {
            const Node n{r, col};
            const Point p = position(n);
            // each edge once: X/Y to the right, Z downward
            for (Direction g : kDirections) {
                const Node m = step(n, g);
                if (m.r < 0 || m.r >= w.rows || m.c < 0 || m.c >= w.cols) continue;
                if (m.r < n.r || (m.r == n.r && m.c < n.c)) continue;
                const Point q = position(m);
                out += "<line x1=\"" + sx(p.x) + "\" y1=\"" + sy(p.y) + "\" x2=\"" + sx(q.x) + "\" y2=\"" + sy(q.y) +
                       "\"/>\n";
            }
        }
    }
    out += "</g>\n<g stroke=\"#222222\" stroke-width=\"1\">\n";
    for (int r = 0; r < w.rows; ++r) {
        for (int col = 0; col < w.cols; ++col) {
            const Node n{r, col};
            const Point p = position(n);
            std::string pts;
            for (int i = 0; i < 6; ++i) {
                const double angle = (60.0 * i + 30.0) * 3.14159265358979323846 / 180.0;
                if (i) pts += ' ';
                pts += sx(p.x + kCell * std::cos(angle)) + "," + sy(p.y + kCell * std::sin(angle));
            }
            out += "<polygon data-node=\"" + std::to_string(r) + "," + std::to_string(col) + "\" points=\"" + pts +
                   "\" fill=\"" + kPalette[static_cast<std::size_t>(c.at(n))] + "\"/>\n";
        }
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace

const char* palette(int color) {
    if (color < 0 || color >= kMaxColors) throw std::out_of_range("palette index");
    return kPalette[static_cast<std::size_t>(color)];
}

Window parse_window(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos) throw std::invalid_argument("window must look like RxC");
    std::size_t used = 0;
    Window w;
    try {
        w.rows = std::stoi(text.substr(0, x), &used);
        if (used != x) throw std::invalid_argument("");
        const std::string rest = text.substr(x + 1);
        w.cols = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("window must look like RxC");
    }
    if (w.rows <= 0 || w.cols <= 0) throw std::invalid_argument("window must be positive");
    return w;
}

std::string render(const PeriodicColoring& c, RenderFormat format, Window window) {
    if (window.rows == 0) window.rows = c.height();
    if (window.cols == 0) window.cols = c.width();
    if (window.rows < c.height() || window.cols < c.width()) {
        throw std::invalid_argument("window " + std::to_string(window.rows) + "x" + std::to_string(window.cols) +
                                    " is smaller than the domain " + std::to_string(c.height()) + "x" +
                                    std::to_string(c.width()));
    }
    if (format == RenderFormat::Svg) return render_svg(c, window);
    std::string out;
    for (int r = 0; r < window.rows; ++r) {
        if (r) out += '\n';
        for (int col = 0; col < window.cols; ++col) out += static_cast<char>('0' + c.at({r, col}));
    }
    return out;
}

}  // namespace hexcr
