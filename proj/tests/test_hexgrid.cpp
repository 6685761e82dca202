#include <doctest.h>

#include <random>
#include <set>

#include "hexcr/hexgrid.hpp"
#include "oracles.hpp"

using namespace hexcr;

TEST_CASE("step follows the brick embedding") {
    CHECK(step({0, 0}, Direction::X) == Node{0, 1});
    CHECK(step({0, 0}, Direction::Y) == Node{0, -1});
    CHECK(step({0, 0}, Direction::Z) == Node{1, 0});
    CHECK(step({0, 1}, Direction::X) == Node{0, 0});
    CHECK(step({0, 1}, Direction::Y) == Node{0, 2});
    CHECK(step({0, 1}, Direction::Z) == Node{-1, 1});
    CHECK(step({-3, 0}, Direction::Z) == Node{-4, 0});
}

TEST_CASE("step is an involution and neighbours are distinct on a 50x50 window") {
    for (int r = -25; r < 25; ++r) {
        for (int c = -25; c < 25; ++c) {
            const Node n{r, c};
            const auto nb = neighbors(n);
            CHECK((nb[0] != nb[1] && nb[1] != nb[2] && nb[0] != nb[2]));
            for (Direction g : kDirections) {
                REQUIRE(step(step(n, g), g) == n);
                CHECK(step(n, g).parity() != n.parity());
            }
        }
    }
}

TEST_CASE("xyzxyz is the identity from random nodes") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-1000, 1000);
    const auto word = parse_word("xyzxyz");
    for (int i = 0; i < 1000; ++i) {
        const Node n{coord(rng), coord(rng)};
        REQUIRE(walk(n, word) == n);
    }
}

TEST_CASE("word_to_node") {
    CHECK(word_to_node("") == kOrigin);
    CHECK(word_to_node("xx") == kOrigin);
    CHECK(word_to_node("yy") == kOrigin);
    CHECK(word_to_node("zz") == kOrigin);
    CHECK(word_to_node("yxz") == Node{1, -2});
    CHECK(word_to_node("YXZ") == Node{1, -2});
    CHECK(oracle::bfs_distance(kOrigin, word_to_node("yxz")) == 3);
    CHECK_THROWS_AS((void)parse_word("xa"), std::invalid_argument);
}

TEST_CASE("distance agrees with the path oracle") {
    CHECK(distance(kOrigin, kOrigin) == 0);
    CHECK(distance(kOrigin, {0, 1}) == 1);
    CHECK(distance(kOrigin, {1, -2}) == 3);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coord(-5, 5);
    for (int i = 0; i < 200; ++i) {
        const Node a{coord(rng), coord(rng)};
        const Node b{coord(rng), coord(rng)};
        const Node m{coord(rng), coord(rng)};
        const int ab = distance(a, b);
        CHECK(ab == oracle::bfs_distance(a, b));
        CHECK(ab == distance(b, a));
        CHECK(ab <= distance(a, m) + distance(m, b));
    }
}

TEST_CASE("balls and shell sizes") {
    CHECK(ball(kOrigin, 0).size() == 1);
    CHECK(ball(kOrigin, 1).size() == 4);
    CHECK(ball(kOrigin, 3).size() == 19);
    const BallLayout layout = ball_layout(kOrigin, 20);
    std::vector<int> shell(21, 0);
    for (int d : layout.dist) ++shell[static_cast<std::size_t>(d)];
    CHECK(shell[0] == 1);
    for (int d = 1; d <= 20; ++d) CHECK(shell[static_cast<std::size_t>(d)] == 3 * d);
    // BFS order: distances never decrease
    for (std::size_t i = 1; i < layout.dist.size(); ++i) CHECK(layout.dist[i - 1] <= layout.dist[i]);
    for (std::size_t i = 0; i < 60; ++i) CHECK(layout.dist[i] == oracle::bfs_distance(kOrigin, layout.nodes[i]));
}

TEST_CASE("translations are exactly the even shifts") {
    CHECK_THROWS_AS(Translation(1, 0), std::invalid_argument);
    for (int dr = -3; dr <= 3; ++dr) {
        for (int dc = -3; dc <= 3; ++dc) {
            bool preserves = true;
            for (int r = -2; r <= 2; ++r)
                for (int c = -2; c <= 2; ++c)
                    for (Direction g : kDirections) {
                        const Node n{r, c};
                        preserves = preserves && step(Node{r + dr, c + dc}, g) == Node{step(n, g).r + dr, step(n, g).c + dc};
                    }
            CHECK(preserves == ((dr + dc) % 2 == 0));
        }
    }
    const Translation a(1, 1), b(1, -1);
    CHECK(a.compose(b) == Translation(2, 0));
    CHECK(a.compose(a.inverse()) == Translation(0, 0));
    // (1,1) and (1,-1) generate every even shift
    for (int dr = -4; dr <= 4; ++dr)
        for (int dc = -4; dc <= 4; ++dc) {
            if ((dr + dc) % 2) continue;
            const int i = (dr + dc) / 2, j = (dr - dc) / 2;
            CHECK(Translation(i + j, i - j) == Translation(dr, dc));
        }
}

TEST_CASE("apply_symmetry matches the path-replay oracle") {
    const auto& perms = all_direction_perms();
    CHECK(perms[0] == DirectionPerm{});
    std::set<std::string> distinct;
    for (const auto& p : perms) distinct.insert(to_string(p));
    CHECK(distinct.size() == 6);

    const DirectionPerm swap_xy{{Direction::Y, Direction::X, Direction::Z}};
    const Node base{2, 3};
    CHECK(apply_symmetry(step(base, Direction::X), base, swap_xy) == step(base, Direction::Y));

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coord(-4, 4);
    for (int i = 0; i < 100; ++i) {
        const Node n{coord(rng), coord(rng)};
        const Node b{coord(rng), coord(rng)};
        CHECK(apply_symmetry(n, b, perms[0]) == n);
        for (const auto& p : perms) {
            const Node img = apply_symmetry(n, b, p);
            REQUIRE(img == oracle::symmetry_by_walk(n, b, p));
            CHECK(distance(b, img) == distance(b, n));
        }
    }
}

TEST_CASE("automorphisms preserve adjacency") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coord(-6, 6);
    for (int i = 0; i < 50; ++i) {
        const Node t{coord(rng), coord(rng)};
        for (const auto& p : all_direction_perms()) {
            const Automorphism phi{t, p};
            CHECK(phi(kOrigin) == t);
            const Node v{coord(rng), coord(rng)};
            for (Direction g : kDirections) CHECK(phi(step(v, g)) == step(phi(v), p(g)));
        }
    }
}

TEST_CASE("coset lines") {
    CHECK(coset_line({0, 0}) == coset_line({0, 1}));
    CHECK(coset_line({0, 0}) == coset_line({-1, -1}));
    CHECK(coset_line({0, 0}) != coset_line({0, 2}));
    CHECK(left_multiply(kYzShift, kOrigin) == word_to_node("yz"));
    // the line through the origin, generated from the definition
    std::set<Node> line;
    Node v = kOrigin;
    const auto yz = parse_word("yz");
    for (int j = 0; j < 10; ++j) {
        line.insert(v);
        line.insert(step(v, Direction::X));
        v = walk(v, yz);
    }
    for (Node n : line) CHECK(coset_line(n) == coset_line(kOrigin));
    // partition: each node of a window lies on exactly one line, and
    // membership matches the line's own predicate
    for (int r = -6; r < 6; ++r)
        for (int c = -6; c < 6; ++c) {
            const CosetLine l = coset_line({r, c});
            CHECK(l.contains({r, c}));
            CHECK(l.anchor.r == 0);
            CHECK(l.anchor.even());
            CHECK(!coset_line({r, c + 2}).contains({r, c}));
        }
}
