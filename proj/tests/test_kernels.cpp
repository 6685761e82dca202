#include <doctest.h>

#include <random>

#include "hexcr/board.hpp"
#include "hexcr/kernels.hpp"

using namespace hexcr;
using namespace hexcr::kernels;

namespace {

std::vector<Board> boards() {
    std::vector<Board> out;
    out.push_back(Board::torus(2, 2, Board::Order::RowMajor));
    out.push_back(Board::torus(4, 6, Board::Order::Bfs));
    out.push_back(Board::torus(10, 14, Board::Order::RowMajor));
    out.push_back(Board::ball(0));
    out.push_back(Board::ball(3));
    out.push_back(Board::ball(7));
    return out;
}

std::vector<std::uint32_t> random_domain(std::mt19937& rng, std::size_t n, int k, int density) {
    std::uniform_int_distribution<int> pct(0, 99);
    std::vector<std::uint32_t> d(n);
    for (auto& v : d) {
        v = 0;
        for (int c = 0; c < k; ++c)
            if (pct(rng) < density) v |= 1u << c;
    }
    return d;
}

}  // namespace

TEST_CASE("boards are consistent cubic graphs") {
    for (const Board& b : boards()) {
        const BoardView v = b.view();
        CHECK(v.n % kLanes == 0);
        CHECK(v.n >= b.cells());
        for (std::size_t i = 0; i < b.cells(); ++i) {
            for (int t = 0; t < 3; ++t) {
                const auto u = static_cast<std::size_t>(v.nbr[t][i]);
                REQUIRE(u < v.n);
                if (u < b.cells()) {
                    // the back pointer lands on a slot of u that points at i
                    const std::size_t slot = static_cast<std::size_t>(v.back[t][i]) / v.n - 1;
                    CHECK(static_cast<std::size_t>(v.back[t][i]) % v.n == u);
                    CHECK(static_cast<std::size_t>(v.nbr[slot][u]) == i);
                    if (b.height()) {
                        CHECK(*b.index_of(step(b.node(i), kDirections[t])) == u);
                    } else {
                        CHECK(b.node(u) == step(b.node(i), kDirections[t]));
                    }
                } else {
                    CHECK(!v.constrained[u]);
                }
            }
        }
    }
    const Board t = Board::torus(4, 6, Board::Order::Bfs);
    CHECK(t.node(0) == kOrigin);
    CHECK(*t.index_of({4, -6}) == 0);
    const Board ball = Board::ball(2);
    CHECK(ball.cells() == 10);
    CHECK(!ball.index_of({5, 5}).has_value());
}

TEST_CASE("star table lists every ordering of every row") {
    const StarTable t = make_star_table(parse_array("[03-111-12]"));
    // row 0 = {1,1,1}: 1 ordering; row 1 = {0,1,2}: 6; row 2 = {1,2,2}: 3
    CHECK(t.size() == 10);
    CHECK(t.all == 7u);
}

TEST_CASE("scalar support on a hand-sized case") {
    // [03-30] on the 2x2 torus: fixing one cell forces the rest
    const Board b = Board::torus(2, 2, Board::Order::RowMajor);
    const StarTable table = make_star_table(parse_array("[03-30]"));
    std::vector<std::uint32_t> dom(b.padded(), 3u), scratch;
    dom[0] = 1u;
    CHECK(propagate(kernel_set(Isa::Scalar), table, b, dom, scratch));
    CHECK(dom[0] == 1u);
    CHECK(dom[1] == 2u);
    CHECK(dom[2] == 2u);
    CHECK(dom[3] == 1u);
    dom.assign(b.padded(), 3u);
    dom[0] = 1u;
    dom[1] = 1u;
    CHECK(!propagate(kernel_set(Isa::Scalar), table, b, dom, scratch));
}

TEST_CASE("avx2 kernels equal the scalar reference") {
    if (!isa_available(Isa::Avx2)) {
        MESSAGE("AVX2 not available; skipping");
        return;
    }
    const KernelSet& s = kernel_set(Isa::Scalar);
    const KernelSet& a = kernel_set(Isa::Avx2);
    std::mt19937 rng(1234);
    for (const char* text : {"[03-30]", "[12-111-21]", "[03-102-201-30]", "[03-102-111-201-12]",
                             "[12-201-102-201-102-21]"}) {
        const IntersectionArray arr = parse_array(text);
        const StarTable table = make_star_table(arr);
        for (const Board& b : boards()) {
            const BoardView v = b.view();
            for (int density : {30, 60, 90, 100}) {
                for (int trial = 0; trial < 5; ++trial) {
                    const auto dom = random_domain(rng, v.n, arr.k(), density);
                    std::vector<std::uint32_t> sup_s(4 * v.n), sup_a(4 * v.n);
                    s.support(table, v, dom.data(), sup_s.data());
                    a.support(table, v, dom.data(), sup_a.data());
                    REQUIRE(sup_s == sup_a);

                    auto d_s = dom, d_a = dom;
                    const PruneResult r_s = s.prune(v, sup_s.data(), d_s.data());
                    const PruneResult r_a = a.prune(v, sup_a.data(), d_a.data());
                    CHECK(d_s == d_a);
                    CHECK(r_s.changed == r_a.changed);
                    CHECK(r_s.wiped_out == r_a.wiped_out);

                    std::vector<std::uint32_t> colour(v.n), p_s(v.n), p_a(v.n);
                    std::uniform_int_distribution<int> pick(0, arr.k() - 1);
                    for (auto& c : colour) c = static_cast<std::uint32_t>(pick(rng));
                    s.profile(v, colour.data(), p_s.data());
                    a.profile(v, colour.data(), p_a.data());
                    CHECK(p_s == p_a);
                }
            }
        }
    }
}

TEST_CASE("dispatch") {
    CHECK(isa_available(Isa::Scalar));
    CHECK(&kernel_set(Isa::Scalar) != nullptr);
    const KernelSet& best = active_kernels();
    CHECK(isa_available(best.isa));
    CHECK(to_string(Isa::Scalar) == "scalar");
}
