#pragma once

// Periodic colourings of the grid and the checks run on them.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hexcr/arrays.hpp"
#include "hexcr/hexgrid.hpp"

namespace hexcr {

/// colour(r, c) = cells[(r mod H) * W + (c mod W)]. H and W are even, so
/// (H, 0) and (0, W) are graph translations and the colouring is
/// well-defined on the whole plane. Every colour 0..k-1 occurs.
class PeriodicColoring {
public:
    /// Throws std::invalid_argument on odd/nonpositive sizes, colours >= k,
    /// or a colour that never occurs.
    PeriodicColoring(int height, int width, int colors, std::vector<std::uint8_t> cells);

    /// rows are strings of digits, one per brick row.
    static PeriodicColoring from_rows(int colors, const std::vector<std::string>& rows);

    [[nodiscard]] int height() const { return height_; }
    [[nodiscard]] int width() const { return width_; }
    [[nodiscard]] int colors() const { return colors_; }
    [[nodiscard]] std::span<const std::uint8_t> cells() const { return cells_; }

    [[nodiscard]] int at(Node n) const;
    [[nodiscard]] int cell(int r, int c) const { return cells_[static_cast<std::size_t>(r) * width_ + c]; }

    /// Same colouring on a larger rectangle; both sizes must be multiples.
    [[nodiscard]] PeriodicColoring lift(int height, int width) const;
    [[nodiscard]] std::vector<std::string> rows() const;

    friend bool operator==(const PeriodicColoring&, const PeriodicColoring&) = default;

private:
    int height_;
    int width_;
    int colors_;
    std::vector<std::uint8_t> cells_;
};

/// A periodic vertex set C. Stored as its own bitmap so that C may be the
/// whole grid.
class CodeSet {
public:
    /// Throws std::invalid_argument if empty or the sizes are bad.
    CodeSet(int height, int width, std::vector<bool> members);

    /// The set of colour-`color` nodes of c.
    static CodeSet color_class(const PeriodicColoring& c, int color);

    [[nodiscard]] int height() const { return height_; }
    [[nodiscard]] int width() const { return width_; }
    [[nodiscard]] bool contains(Node n) const;

private:
    int height_;
    int width_;
    std::vector<bool> members_;
};

/// Two same-coloured nodes with different neighbour profiles.
struct NotPerfect {
    int color = 0;
    Node first;
    Node second;
    std::array<int, kMaxColors> first_profile{};
    std::array<int, kMaxColors> second_profile{};

    friend bool operator==(const NotPerfect&, const NotPerfect&) = default;
};

std::string describe(const NotPerfect& w, int colors);

using MatrixOrWitness = std::variant<ParameterMatrix, NotPerfect>;

/// Neighbour-count matrix, or the first mismatching pair in row-major order.
[[nodiscard]] MatrixOrWitness parameter_matrix(const PeriodicColoring& c);

/// Perfect, tridiagonal with b_i, c_i >= 1, and colour class i is exactly
/// the set of nodes at distance i from class 0.
[[nodiscard]] bool is_distance_regular(const PeriodicColoring& c);

/// Raw multi-source BFS distances from colour-0 nodes, row-major over the
/// domain (torus quotient, which equals the distance in the plane).
[[nodiscard]] std::vector<int> distances_to_class(const PeriodicColoring& c, int color);

class CapExceeded : public std::runtime_error {
public:
    CapExceeded(int cap, int max_distance);
    [[nodiscard]] int max_distance() const { return max_distance_; }

private:
    int max_distance_;
};

/// Colour of v = distance(v, C). Throws CapExceeded if that exceeds cap.
[[nodiscard]] PeriodicColoring distance_coloring(const CodeSet& code, int cap);

struct Regularity {
    bool regular = false;
    std::optional<IntersectionArray> array;
};

[[nodiscard]] Regularity is_completely_regular(const CodeSet& code);

// ---------------------------------------------------------------------------
// Coset-line shifts

/// Selected coset lines, by key d (the c - r of the line's even members):
/// line d is selected iff selected[(d mod period) / 2]. The enlarged domain
/// (height, width) is a common multiple of the colouring's domain and of
/// period, so the selection is invariant under both domain translations.
struct ShiftSelection {
    int height = 0;
    int width = 0;
    int period = 2;
    std::vector<bool> selected;

    /// pattern is a string over {0,1}; character j selects lines d = 2j
    /// (mod 2 * pattern length).
    static ShiftSelection from_pattern(const std::string& pattern, const PeriodicColoring& base);

    [[nodiscard]] bool selects(const CosetLine& line) const;
    [[nodiscard]] bool empty() const;
};

class ShiftPreconditionError : public std::runtime_error {
public:
    ShiftPreconditionError(CosetLine line, Node a, Node b);
    CosetLine line;
    Node a;
    Node b;
};

/// Recolours every selected line by its yz-translate (v -> v + (-1,-1)).
/// Requires colour(v) == colour(v + (2,2)) along every selected line.
[[nodiscard]] PeriodicColoring shift_cosets(const PeriodicColoring& c, const ShiftSelection& sel);

// ---------------------------------------------------------------------------
// Equivalence

/// The colouring v -> c(phi(v)) on its smallest even rectangle.
[[nodiscard]] PeriodicColoring transform(const PeriodicColoring& c, const Automorphism& phi);

/// c(v + t) as a colouring of v.
[[nodiscard]] PeriodicColoring translate(const PeriodicColoring& c, const Translation& t);

/// Colour i becomes k-1-i.
[[nodiscard]] PeriodicColoring reverse_colors(const PeriodicColoring& c);

/// Some phi with c2(phi(v)) == c1(v) for all v, if one exists.
[[nodiscard]] std::optional<Automorphism> find_equivalence(const PeriodicColoring& c1, const PeriodicColoring& c2);
[[nodiscard]] bool equivalent(const PeriodicColoring& c1, const PeriodicColoring& c2);

/// Equal keys iff equivalent.
[[nodiscard]] std::string canonical_key(const PeriodicColoring& c);

}  // namespace hexcr
