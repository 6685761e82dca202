#pragma once

// Integer model of the infinite hexagonal grid.
//
// The grid is the Cayley graph of <x, y, z | xx = yy = zz = xyzxyz = o>.
// Nodes live in a "brick" embedding: node (r, c) has parity (r + c) mod 2,
// and the three labelled edges are
//
//   even parity:  X -> (r, c+1)   Y -> (r, c-1)   Z -> (r+1, c)
//   odd parity:   X -> (r, c-1)   Y -> (r, c+1)   Z -> (r-1, c)
//
// A word is evaluated left to right from the origin (0, 0), so the node
// named "yxz" is the end of the walk y, x, z.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace hexcr {

enum class Direction : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Direction, 3> kDirections{Direction::X, Direction::Y, Direction::Z};

char to_char(Direction d);

struct Node {
    int r = 0;
    int c = 0;

    [[nodiscard]] constexpr int parity() const { return ((r + c) % 2 + 2) % 2; }
    [[nodiscard]] constexpr bool even() const { return parity() == 0; }

    friend constexpr auto operator<=>(const Node&, const Node&) = default;
};

std::string to_string(const Node& n);

struct NodeHash {
    std::size_t operator()(const Node& n) const noexcept {
        return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(static_cast<std::uint32_t>(n.r)) << 32) |
                                          static_cast<std::uint32_t>(n.c));
    }
};

inline constexpr Node kOrigin{0, 0};

/// The g-neighbour of n under the fixed embedding.
[[nodiscard]] constexpr Node step(Node n, Direction g) {
    const int s = n.even() ? 1 : -1;
    switch (g) {
        case Direction::X: return {n.r, n.c + s};
        case Direction::Y: return {n.r, n.c - s};
        case Direction::Z: return {n.r + s, n.c};
    }
    return n;
}

[[nodiscard]] constexpr std::array<Node, 3> neighbors(Node n) {
    return {step(n, Direction::X), step(n, Direction::Y), step(n, Direction::Z)};
}

/// Parses a word over {x, y, z} (either case). Throws std::invalid_argument
/// on any other character.
std::vector<Direction> parse_word(std::string_view word);

[[nodiscard]] Node walk(Node start, const std::vector<Direction>& word);
[[nodiscard]] Node word_to_node(const std::vector<Direction>& word);
[[nodiscard]] Node word_to_node(std::string_view word);

/// Graph distance by breadth-first search.
[[nodiscard]] int distance(Node a, Node b);

/// Nodes at distance <= radius from center, in BFS order (center first;
/// within a shell, discovery order through X, Y, Z).
[[nodiscard]] std::vector<Node> ball(Node center, int radius);

/// BFS distances from center, aligned with ball(center, radius).
struct BallLayout {
    std::vector<Node> nodes;
    std::vector<int> dist;
};
[[nodiscard]] BallLayout ball_layout(Node center, int radius);

// ---------------------------------------------------------------------------
// Translations

/// Coordinate shift with even dr + dc; these are exactly the shifts that
/// preserve adjacency and edge labels.
class Translation {
public:
    constexpr Translation() = default;
    /// Throws std::invalid_argument when dr + dc is odd.
    Translation(int dr, int dc);

    [[nodiscard]] constexpr int dr() const { return dr_; }
    [[nodiscard]] constexpr int dc() const { return dc_; }

    [[nodiscard]] constexpr Node apply(Node n) const { return {n.r + dr_, n.c + dc_}; }
    [[nodiscard]] Translation compose(const Translation& o) const { return {dr_ + o.dr_, dc_ + o.dc_}; }
    [[nodiscard]] Translation inverse() const { return {-dr_, -dc_}; }

    friend constexpr bool operator==(const Translation&, const Translation&) = default;

private:
    int dr_ = 0;
    int dc_ = 0;
};

// ---------------------------------------------------------------------------
// Vertex-fixing symmetries

/// A permutation of edge labels: image[g] is where label g goes.
struct DirectionPerm {
    std::array<Direction, 3> image{Direction::X, Direction::Y, Direction::Z};

    [[nodiscard]] constexpr Direction operator()(Direction g) const { return image[static_cast<int>(g)]; }
    [[nodiscard]] DirectionPerm inverse() const;
    friend constexpr bool operator==(const DirectionPerm&, const DirectionPerm&) = default;
};

/// All six permutations, identity first.
[[nodiscard]] const std::array<DirectionPerm, 6>& all_direction_perms();

std::string to_string(const DirectionPerm& p);

/// Left multiplication by the group element p: the walk from the origin
/// spelled by u, replayed from p. A graph automorphism for every p.
[[nodiscard]] Node left_multiply(Node p, Node u);

/// The automorphism fixing the origin that relabels every edge by perm.
[[nodiscard]] Node relabel_at_origin(Node n, const DirectionPerm& perm);

/// Image of n under the unique automorphism fixing base that permutes
/// edge labels by perm.
[[nodiscard]] Node apply_symmetry(Node n, Node base, const DirectionPerm& perm);

/// A general automorphism: v -> target . perm(v). Every automorphism of the
/// grid has exactly one such form.
struct Automorphism {
    Node target = kOrigin;
    DirectionPerm perm{};

    [[nodiscard]] Node operator()(Node v) const { return left_multiply(target, relabel_at_origin(v, perm)); }
};

// ---------------------------------------------------------------------------
// Coset lines {u (yz)^j, u (yz)^j x}

/// One bi-infinite line: even members (j, key + j), odd members (j, key + j + 1).
struct CosetLine {
    Node anchor;  // even member on row 0

    [[nodiscard]] int key() const { return anchor.c; }
    [[nodiscard]] bool contains(Node n) const;
    friend constexpr bool operator==(const CosetLine&, const CosetLine&) = default;
};

[[nodiscard]] CosetLine coset_line(Node n);

/// The yz-translation acting on nodes by left multiplication.
inline constexpr Node kYzShift{-1, -1};

}  // namespace hexcr
