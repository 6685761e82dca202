#include "hexcr/hexcol.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace hexcr {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        if (nl == std::string_view::npos) {
            lines.push_back(text);
            break;
        }
        lines.push_back(text.substr(0, nl));
        text.remove_prefix(nl + 1);
    }
    return lines;
}

int parse_int(std::string_view s, int line) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) throw HexcolError("bad integer '" + std::string(s) + "'", line);
    return v;
}

}  // namespace

HexcolFile parse_hexcol(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.size() < 3) throw HexcolError("truncated header", static_cast<int>(lines.size()) + 1);
    if (lines[0] != "HEXCOL 1") throw HexcolError("expected 'HEXCOL 1'", 1);

    constexpr std::string_view kArray = "array ";
    if (!lines[1].starts_with(kArray)) throw HexcolError("expected 'array [..]'", 2);
    std::optional<IntersectionArray> array;
    try {
        array = parse_array(lines[1].substr(kArray.size()));
    } catch (const ArrayParseError& e) {
        throw HexcolError(e.what(), 2);
    }

    constexpr std::string_view kSize = "size ";
    if (!lines[2].starts_with(kSize)) throw HexcolError("expected 'size H W'", 3);
    const std::string_view dims = lines[2].substr(kSize.size());
    const auto sp = dims.find(' ');
    if (sp == std::string_view::npos) throw HexcolError("expected 'size H W'", 3);
    const int height = parse_int(dims.substr(0, sp), 3);
    const int width = parse_int(dims.substr(sp + 1), 3);
    if (height <= 0 || width <= 0 || height % 2 || width % 2) throw HexcolError("H and W must be even and positive", 3);
    if (lines.size() != static_cast<std::size_t>(3 + height)) {
        throw HexcolError("expected " + std::to_string(height) + " rows, found " + std::to_string(lines.size() - 3),
                          static_cast<int>(lines.size()));
    }

    std::vector<std::uint8_t> cells;
    cells.reserve(static_cast<std::size_t>(height) * width);
    for (int r = 0; r < height; ++r) {
        const std::string_view row = lines[3 + r];
        const int line = 4 + r;
        if (row.size() != static_cast<std::size_t>(width)) throw HexcolError("row has wrong width", line);
        for (char ch : row) {
            if (ch < '0' || ch > '9') throw HexcolError("non-digit cell", line);
            if (ch - '0' >= array->k()) throw HexcolError("color " + std::string(1, ch) + " >= k", line);
            cells.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
    }
    try {
        return {*array, PeriodicColoring(height, width, array->k(), std::move(cells))};
    } catch (const std::invalid_argument& e) {
        throw HexcolError(e.what(), 4);
    }
}

std::string format_hexcol(const IntersectionArray& array, const PeriodicColoring& coloring) {
    std::string out = "HEXCOL 1\narray " + format_array(array) + "\nsize " + std::to_string(coloring.height()) + " " +
                      std::to_string(coloring.width()) + "\n";
    for (const auto& row : coloring.rows()) out += row + "\n";
    return out;
}

HexcolFile load_hexcol(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_hexcol(buf.str());
}

void save_hexcol(const std::filesystem::path& path, const IntersectionArray& array, const PeriodicColoring& coloring) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << format_hexcol(array, coloring);
}

}  // namespace hexcr
