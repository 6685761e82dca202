#pragma once

// HEXCOL text format:
//
//   HEXCOL 1
//   array [03-102-30]
//   size H W
//   <H lines of W digits>
//
// Each line ends in '\n'. Row r is brick row r, column c brick column c.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hexcr/arrays.hpp"
#include "hexcr/coloring.hpp"

namespace hexcr {

class HexcolError : public std::runtime_error {
public:
    HexcolError(const std::string& what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] int line() const { return line_; }

private:
    int line_;
};

struct HexcolFile {
    IntersectionArray array;  // claimed, not verified
    PeriodicColoring coloring;
};

[[nodiscard]] HexcolFile parse_hexcol(std::string_view text);
[[nodiscard]] std::string format_hexcol(const IntersectionArray& array, const PeriodicColoring& coloring);

[[nodiscard]] HexcolFile load_hexcol(const std::filesystem::path& path);
void save_hexcol(const std::filesystem::path& path, const IntersectionArray& array, const PeriodicColoring& coloring);

}  // namespace hexcr
