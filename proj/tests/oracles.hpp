#pragma once

// Slow, independent reference computations for the tests. Everything here
// works directly from the step rule, never from the library's kernels.

#include <array>
#include <deque>
#include <map>
#include <random>
#include <vector>

#include "hexcr/coloring.hpp"
#include "hexcr/hexgrid.hpp"

namespace oracle {

using hexcr::Direction;
using hexcr::Node;

// Shortest word leading from `from` to `to`, found by BFS over labelled steps.
inline std::vector<Direction> word_between(Node from, Node to) {
    std::map<Node, std::pair<Node, Direction>> parent;
    std::deque<Node> queue{from};
    parent[from] = {from, Direction::X};
    while (!queue.empty()) {
        const Node v = queue.front();
        queue.pop_front();
        if (v == to) break;
        for (Direction g : hexcr::kDirections) {
            const Node u = hexcr::step(v, g);
            if (parent.emplace(u, std::pair{v, g}).second) queue.push_back(u);
        }
    }
    std::vector<Direction> word;
    for (Node v = to; v != from; v = parent.at(v).first) word.insert(word.begin(), parent.at(v).second);
    return word;
}

inline int bfs_distance(Node a, Node b) { return static_cast<int>(word_between(a, b).size()); }

// Replays the path base -> n with every label relabelled.
inline Node symmetry_by_walk(Node n, Node base, const hexcr::DirectionPerm& perm) {
    Node v = base;
    for (Direction g : word_between(base, n)) v = hexcr::step(v, perm(g));
    return v;
}

inline std::array<int, hexcr::kMaxColors> profile(const hexcr::PeriodicColoring& c, Node v) {
    std::array<int, hexcr::kMaxColors> p{};
    for (Direction g : hexcr::kDirections) ++p[static_cast<std::size_t>(c.at(hexcr::step(v, g)))];
    return p;
}

// Per-vertex recount; nullopt-like empty vector when not perfect.
inline std::vector<int> naive_matrix(const hexcr::PeriodicColoring& c) {
    const int k = c.colors();
    std::vector<int> m(static_cast<std::size_t>(k) * k, -1);
    for (int r = 0; r < c.height(); ++r) {
        for (int col = 0; col < c.width(); ++col) {
            const int i = c.at({r, col});
            const auto p = profile(c, {r, col});
            for (int j = 0; j < k; ++j) {
                int& cell = m[static_cast<std::size_t>(i) * k + j];
                if (cell >= 0 && cell != p[static_cast<std::size_t>(j)]) return {};
                cell = p[static_cast<std::size_t>(j)];
            }
        }
    }
    return m;
}

// Distance in the plane from v to the nearest node of colour `color`.
inline int plane_distance_to(const hexcr::PeriodicColoring& c, Node v, int color) {
    std::map<Node, int> seen{{v, 0}};
    std::deque<Node> queue{v};
    while (!queue.empty()) {
        const Node u = queue.front();
        queue.pop_front();
        if (c.at(u) == color) return seen[u];
        for (Node w : hexcr::neighbors(u)) {
            if (seen.emplace(w, seen[u] + 1).second) queue.push_back(w);
        }
    }
    return -1;
}

inline hexcr::PeriodicColoring random_coloring(std::mt19937& rng, int h, int w, int k) {
    std::uniform_int_distribution<int> pick(0, k - 1);
    while (true) {
        std::vector<std::uint8_t> cells(static_cast<std::size_t>(h) * w);
        for (auto& v : cells) v = static_cast<std::uint8_t>(pick(rng));
        std::vector<bool> seen(static_cast<std::size_t>(k));
        for (auto v : cells) seen[v] = true;
        bool all = true;
        for (bool s : seen) all = all && s;
        if (all) return {h, w, k, std::move(cells)};
    }
}

}  // namespace oracle
