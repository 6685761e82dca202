// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hexcr/catalog.hpp"
#include "hexcr/coloring.hpp"
#include "hexcr/search.hpp"
#include "oracles.hpp"

using namespace hexcr;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& why) {
        if (!ok && pass) {
            pass = false;
            detail = why;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string join(const std::set<std::string>& s) {
    std::string out;
    for (const auto& x : s) out += (out.empty() ? "" : ",") + x;
    return "{" + out + "}";
}

struct Split {
    std::set<std::string> feasible, infeasible, undecided;
    int max_radius = 0;
};

Split split(const Classification& c) {
    Split s;
    for (const auto& e : c.entries) {
        const std::string name = format_array(e.array);
        if (std::holds_alternative<Feasible>(e.outcome)) {
            s.feasible.insert(name);
        } else if (const auto* i = std::get_if<InfeasibleAtRadius>(&e.outcome)) {
            s.infeasible.insert(name);
            s.max_radius = std::max(s.max_radius, i->radius);
        } else {
            s.undecided.insert(name);
        }
    }
    return s;
}

// Class representative of an array string.
std::string rep(const std::string& text) {
    const IntersectionArray a = parse_array(text);
    return std::min(format_array(a), format_array(reverse(a)));
}

Verdict classification(int k, const std::set<std::string>& expected, double limit_s, std::size_t undecided_allowed,
                const std::vector<std::string>& must_refute) {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    const Classification c = classify(k, Budgets{}, 8);
    const double elapsed = seconds_since(t0);
    const Split s = split(c);
    std::set<std::string> want;
    for (const auto& e : expected) want.insert(rep(e));

    v.require(s.feasible == want, "feasible " + join(s.feasible) + " != expected " + join(want));
    v.require(s.undecided.size() <= undecided_allowed, "undecided " + join(s.undecided));
    v.require(s.max_radius <= 6, "refuting radius above 6");
    v.require(elapsed < limit_s, "runtime " + std::to_string(elapsed) + " s");
    for (const auto& m : must_refute) v.require(s.infeasible.count(rep(m)) == 1, m + " not refuted");
    if (v.pass) {
        char buf[200];
        std::snprintf(buf, sizeof buf, "%zu classes: %zu feasible, %zu infeasible (max R %d), %zu undecided; %.2f s",
                      c.entries.size(), s.feasible.size(), s.infeasible.size(), s.max_radius, s.undecided.size(),
                      elapsed);
        v.detail = buf;
    }
    return v;
}

Verdict criterion1() {
    Verdict v = classification(2, {"[03-30]", "[03-12]", "[12-21]", "[12-12]", "[21-12]"}, 10.0, 0, {"[03-21]"});
    const Classification c = classify(2, Budgets{}, 1);
    v.require(c.entries.size() == 6, "class count " + std::to_string(c.entries.size()));
    for (const auto& e : c.entries) {
        if (format_array(e.array) != "[03-21]") continue;
        const auto* i = std::get_if<InfeasibleAtRadius>(&e.outcome);
        v.require(i && i->radius <= 4, "[03-21] not refuted within radius 4");
    }
    return v;
}

Verdict criterion2() {
    return classification(3,
                   {"[03-102-30]", "[03-111-12]", "[12-102-12]", "[21-102-12]", "[12-111-12]", "[12-111-21]",
                    "[21-111-12]", "[12-201-12]"},
                   300.0, 0, {"[03-102-12]", "[03-102-21]", "[03-201-21]", "[12-102-21]", "[21-201-30]"});
}

Verdict criterion3() {
    return classification(4,
                   {"[12-111-111-12]", "[12-111-111-21]", "[21-111-111-12]", "[12-201-102-21]", "[21-102-201-12]",
                    "[03-102-102-30]", "[03-102-201-30]", "[03-111-111-30]", "[12-102-111-21]"},
                   1800.0, 2, {});
}

Verdict criterion4() {
    Verdict v;
    int flagged = 0;
    for (int k = 4; k <= 5; ++k) {
        for (const auto& a : enumerate_candidates(k, false)) {
            const std::string s = format_array(a);
            const bool textual = s.find("-111-102-") != std::string::npos || s.find("-201-111-") != std::string::npos;
            const bool flag = forbidden_fragment_check(a);
            v.require(flag == textual, "fragment check disagrees with the band text on " + s);
            if (!flag) continue;
            ++flagged;
            const auto r = refute(a, 6);
            v.require(r.has_value(), s + " flagged but not refuted within radius 6");
        }
    }
    v.require(flagged > 0, "no candidate flagged");
    if (v.pass) v.detail = std::to_string(flagged) + " flagged candidates at k=4,5, all refuted with R <= 6";
    return v;
}

Verdict criterion5() {
    Verdict v;
    const auto entries = load_catalog(default_data_dir());
    const CatalogReport report = verify_catalog(entries, 8);
    v.require(entries.size() >= 25, "only " + std::to_string(entries.size()) + " entries");
    for (const auto& r : report.entries) v.require(r.ok, r.name + ": " + r.detail);
    auto pair_ok = [&](const std::string& a, const std::string& b) {
        for (const auto& r : report.comparisons)
            if (r.name == a + " vs " + b) return r.ok;
        return false;
    };
    v.require(pair_ok("[03-111-12].I", "[03-111-12].II"), "[03-111-12] pair missing or equivalent");
    v.require(pair_ok("[12-201-12].I", "[12-201-12].II"), "[12-201-12] pair missing or equivalent");
    for (const auto& r : report.comparisons) v.require(r.ok, r.name + ": " + r.detail);
    if (v.pass) {
        v.detail = std::to_string(entries.size()) + " entries verified, " + std::to_string(report.comparisons.size()) +
                   " same-array pairs nonequivalent";
    }
    return v;
}

Verdict criterion6() {
    Verdict v;
    const PeriodicColoring* base = nullptr;
    const auto entries = load_catalog(default_data_dir());
    for (const auto& e : entries)
        if (e.name == "[03-102-201-30]") base = &e.coloring;
    if (!base) {
        v.require(false, "catalogue entry [03-102-201-30] missing");
        return v;
    }
    const MatrixOrWitness matrix = parameter_matrix(*base);
    int valid = 0, nonequivalent = 0;
    for (int len = 1; len <= 4; ++len) {
        for (int bits = 1; bits < (1 << len); ++bits) {
            std::string pattern;
            for (int j = 0; j < len; ++j) pattern += (bits >> j) & 1 ? '1' : '0';
            PeriodicColoring shifted = *base;
            try {
                shifted = shift_cosets(*base, ShiftSelection::from_pattern(pattern, *base));
            } catch (const ShiftPreconditionError&) {
                continue;
            }
            ++valid;
            v.require(parameter_matrix(shifted) == matrix, "pattern " + pattern + " changed the parameter matrix");
            v.require(is_distance_regular(shifted), "pattern " + pattern + " broke distance-regularity");
            if (!equivalent(shifted, *base)) ++nonequivalent;
        }
    }
    v.require(valid > 0, "no valid selection");
    v.require(nonequivalent > 0, "every shift is equivalent to the original");
    if (v.pass) {
        v.detail = std::to_string(valid) + " valid selections preserve the matrix, " + std::to_string(nonequivalent) +
                   " give nonequivalent colourings";
    }
    return v;
}

Verdict criterion7() {
    Verdict v;
    int checked = 0, witnesses = 0;
    for (int k = 2; k <= 4; ++k) {
        for (const auto& a : enumerate_candidates(k, false)) {
            ++checked;
            const auto r = refute(a, 6);
            const auto w = torus_search(a, 256);
            v.require(!(r && w), format_array(a) + " is both refuted and witnessed");
            if (w) {
                ++witnesses;
                v.require(is_distance_regular(*w), format_array(a) + " witness fails is_distance_regular");
                const auto m = oracle::naive_matrix(*w);
                v.require(!m.empty() && ParameterMatrix(k, m) == a.matrix(),
                          format_array(a) + " witness fails the recount");
            }
        }
        const std::string once = format_report(classify(k, Budgets{}, 1));
        const std::string again = format_report(classify(k, Budgets{}, 1));
        const std::string eight = format_report(classify(k, Budgets{}, 8));
        v.require(once == again, "k=" + std::to_string(k) + " report differs between runs");
        v.require(once == eight, "k=" + std::to_string(k) + " report differs between 1 and 8 threads");
    }
    if (v.pass) {
        v.detail = std::to_string(checked) + " candidates, " + std::to_string(witnesses) +
                   " witnesses re-verified, reports identical across runs and thread counts";
    }
    return v;
}

Verdict criterion8() {
    Verdict v;
    const BallLayout layout = ball_layout(kOrigin, 20);
    std::vector<int> shell(21, 0);
    for (int d : layout.dist) ++shell[static_cast<std::size_t>(d)];
    for (int d = 1; d <= 20; ++d) v.require(shell[d] == 3 * d, "shell " + std::to_string(d) + " has " + std::to_string(shell[d]));

    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coord(-100000, 100000);
    const auto word = parse_word("xyzxyz");
    for (int i = 0; i < 1000; ++i) {
        const Node n{coord(rng), coord(rng)};
        v.require(walk(n, word) == n, "xyzxyz fails at " + to_string(n));
    }
    for (int r = -25; r < 25; ++r)
        for (int c = -25; c < 25; ++c)
            for (Direction g : kDirections) v.require(step(step({r, c}, g), g) == Node{r, c}, "step not involutive");
    if (v.pass) v.detail = "shells 3d for d=1..20, xyzxyz on 1000 nodes, involution on 50x50";
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"classification k=2", criterion1},   {"classification k=3", criterion2},
        {"classification k=4", criterion3},   {"forbidden fragments", criterion4},
        {"catalogue", criterion5},            {"coset shifts", criterion6},
        {"engine consistency", criterion7},   {"grid sanity", criterion8},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %zu (%s): %s - %s\n", i + 1, criteria[i].first, v.pass ? "PASS" : "FAIL",
                    v.detail.c_str());
        std::fflush(stdout);
        failed += !v.pass;
    }
    return failed ? 1 : 0;
}
