#pragma once

// Parameter matrices of perfect colourings and the bracket notation for
// their tridiagonal (distance-regular) case:
//
//   [a0 b0 - c1 a1 b1 - c2 a2 b2 - ... - c(k-1) a(k-1)]
//
// e.g. "[03-102-30]". Colours are 0-based; row i of the matrix is the
// neighbour colour profile of a colour-i node.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hexcr {

inline constexpr int kDegree = 3;
inline constexpr int kMaxColors = 10;

class ParameterMatrix {
public:
    ParameterMatrix() = default;
    explicit ParameterMatrix(int k) : k_(k), entries_(static_cast<std::size_t>(k) * k, 0) {}
    ParameterMatrix(int k, std::vector<int> row_major);

    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * k_ + j]; }
    int& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * k_ + j]; }

    [[nodiscard]] int row_sum(int i) const;
    [[nodiscard]] bool is_tridiagonal() const;

    friend bool operator==(const ParameterMatrix&, const ParameterMatrix&) = default;

private:
    int k_ = 0;
    std::vector<int> entries_;
};

std::string to_string(const ParameterMatrix& m);

/// Thrown by parse(); row() is the offending 0-based row, or -1 for a
/// syntax error.
class ArrayParseError : public std::invalid_argument {
public:
    ArrayParseError(const std::string& what, int row) : std::invalid_argument(what), row_(row) {}
    [[nodiscard]] int row() const { return row_; }

private:
    int row_;
};

class IntersectionArray {
public:
    /// Throws ArrayParseError if m is not tridiagonal with row sums 3,
    /// b_i >= 1 (i < k-1) and c_i >= 1 (i > 0).
    explicit IntersectionArray(ParameterMatrix m);

    [[nodiscard]] int k() const { return matrix_.k(); }
    [[nodiscard]] const ParameterMatrix& matrix() const { return matrix_; }

    [[nodiscard]] int a(int i) const { return matrix_.at(i, i); }
    [[nodiscard]] int b(int i) const { return i + 1 < k() ? matrix_.at(i, i + 1) : 0; }
    [[nodiscard]] int c(int i) const { return i > 0 ? matrix_.at(i, i - 1) : 0; }

    /// The three neighbour colours of a colour-i node, ascending.
    [[nodiscard]] std::array<int, 3> neighbor_multiset(int i) const;

    friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;

private:
    ParameterMatrix matrix_;
};

[[nodiscard]] IntersectionArray parse_array(std::string_view text);
[[nodiscard]] std::string format_array(const IntersectionArray& a);

/// Central symmetry: colour i becomes colour k-1-i.
[[nodiscard]] IntersectionArray reverse(const IntersectionArray& a);

/// The tridiagonal reading of m, if m is a valid intersection array.
[[nodiscard]] std::optional<IntersectionArray> as_intersection_array(const ParameterMatrix& m);

/// All candidate arrays with k colours, sorted by formatted string. With
/// up_to_reversal, keeps the lexicographically smaller string of each
/// {a, reverse(a)} pair.
[[nodiscard]] std::vector<IntersectionArray> enumerate_candidates(int k, bool up_to_reversal);

}  // namespace hexcr
