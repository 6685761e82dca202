#include "hexcr/hexgrid.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace hexcr {

char to_char(Direction d) {
    switch (d) {
        case Direction::X: return 'x';
        case Direction::Y: return 'y';
        case Direction::Z: return 'z';
    }
    return '?';
}

std::string to_string(const Node& n) { return "(" + std::to_string(n.r) + "," + std::to_string(n.c) + ")"; }

std::vector<Direction> parse_word(std::string_view word) {
    std::vector<Direction> out;
    out.reserve(word.size());
    for (char ch : word) {
        switch (ch) {
            case 'x': case 'X': out.push_back(Direction::X); break;
            case 'y': case 'Y': out.push_back(Direction::Y); break;
            case 'z': case 'Z': out.push_back(Direction::Z); break;
            default: throw std::invalid_argument(std::string("bad letter in word: '") + ch + "'");
        }
    }
    return out;
}

Node walk(Node start, const std::vector<Direction>& word) {
    for (Direction g : word) start = step(start, g);
    return start;
}

Node word_to_node(const std::vector<Direction>& word) { return walk(kOrigin, word); }

Node word_to_node(std::string_view word) { return word_to_node(parse_word(word)); }

int distance(Node a, Node b) {
    if (a == b) return 0;
    std::unordered_map<Node, int, NodeHash> seen{{a, 0}};
    std::deque<Node> queue{a};
    while (!queue.empty()) {
        const Node u = queue.front();
        queue.pop_front();
        const int du = seen[u];
        for (Node v : neighbors(u)) {
            if (seen.contains(v)) continue;
            if (v == b) return du + 1;
            seen.emplace(v, du + 1);
            queue.push_back(v);
        }
    }
    return -1;  // unreachable: the grid is connected
}

BallLayout ball_layout(Node center, int radius) {
    if (radius < 0) throw std::invalid_argument("ball radius must be nonnegative");
    BallLayout out;
    std::unordered_map<Node, int, NodeHash> seen{{center, 0}};
    out.nodes.push_back(center);
    out.dist.push_back(0);
    for (std::size_t head = 0; head < out.nodes.size(); ++head) {
        const Node u = out.nodes[head];
        const int du = out.dist[head];
        if (du == radius) continue;
        for (Node v : neighbors(u)) {
            if (seen.contains(v)) continue;
            seen.emplace(v, du + 1);
            out.nodes.push_back(v);
            out.dist.push_back(du + 1);
        }
    }
    return out;
}

std::vector<Node> ball(Node center, int radius) { return ball_layout(center, radius).nodes; }

Translation::Translation(int dr, int dc) : dr_(dr), dc_(dc) {
    if (((dr + dc) % 2 + 2) % 2 != 0) {
        throw std::invalid_argument("translation (" + std::to_string(dr) + "," + std::to_string(dc) +
                                    ") has odd coordinate sum");
    }
}

DirectionPerm DirectionPerm::inverse() const {
    DirectionPerm inv;
    for (Direction g : kDirections) inv.image[static_cast<int>((*this)(g))] = g;
    return inv;
}

const std::array<DirectionPerm, 6>& all_direction_perms() {
    using D = Direction;
    static const std::array<DirectionPerm, 6> perms{{
        {{D::X, D::Y, D::Z}},
        {{D::X, D::Z, D::Y}},
        {{D::Y, D::X, D::Z}},
        {{D::Y, D::Z, D::X}},
        {{D::Z, D::X, D::Y}},
        {{D::Z, D::Y, D::X}},
    }};
    return perms;
}

std::string to_string(const DirectionPerm& p) {
    std::string s;
    for (Direction g : kDirections) s += to_char(p(g));
    return s;
}

Node left_multiply(Node p, Node u) {
    if (p.even()) return {p.r + u.r, p.c + u.c};
    // p = q.x with q even; x acts on translations by inversion.
    const Node q = step(p, Direction::X);
    if (u.even()) return step(Node{q.r - u.r, q.c - u.c}, Direction::X);
    const Node s = step(u, Direction::X);
    return {q.r - s.r, q.c - s.c};
}

Node relabel_at_origin(Node n, const DirectionPerm& perm) {
    // On even nodes the relabelling is linear. Basis of the even lattice:
    // yz = (-1,-1) and xy = (0,2); (r, c) = -r * yz + (c - r)/2 * xy.
    const Node yz = step(step(kOrigin, perm(Direction::Y)), perm(Direction::Z));
    const Node xy = step(step(kOrigin, perm(Direction::X)), perm(Direction::Y));
    auto linear = [&](Node e) {
        const int alpha = -e.r;
        const int beta = (e.c - e.r) / 2;
        return Node{alpha * yz.r + beta * xy.r, alpha * yz.c + beta * xy.c};
    };
    if (n.even()) return linear(n);
    return step(linear(step(n, Direction::X)), perm(Direction::X));
}

Node apply_symmetry(Node n, Node base, const DirectionPerm& perm) {
    const Node base_inv = base.even() ? Node{-base.r, -base.c} : base;
    return left_multiply(base, relabel_at_origin(left_multiply(base_inv, n), perm));
}

CosetLine coset_line(Node n) {
    const Node even = n.even() ? n : step(n, Direction::X);
    return CosetLine{Node{0, even.c - even.r}};
}

bool CosetLine::contains(Node n) const { return coset_line(n) == *this; }

}  // namespace hexcr
