#pragma once

// Decision engines for intersection arrays:
//
//  * refute: exhaustive search over colourings of a ball rooted at a
//    colour-0 node. Interior nodes must meet their row exactly; nodes on
//    the boundary only must not exceed it. No completion at some radius
//    proves the array infeasible.
//  * torus_search: exhaustive search over colourings of H x W tori; any
//    exact solution lifts to a periodic distance-regular colouring.
//  * classify: runs both over every reversal class with k colours.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hexcr/arrays.hpp"
#include "hexcr/coloring.hpp"

namespace hexcr {

struct SearchStats {
    std::uint64_t nodes = 0;  // branching points visited
};

/// Whether some colouring of ball(origin, radius) with the origin coloured
/// 0 is locally consistent with a.
[[nodiscard]] bool ball_consistent(const IntersectionArray& a, int radius, SearchStats* stats = nullptr);

/// Smallest radius in 1..max_radius at which no consistent ball colouring
/// exists, if any.
[[nodiscard]] std::optional<int> refute(const IntersectionArray& a, int max_radius, SearchStats* stats = nullptr);

/// Local filter: a row 111 followed by 102, or 201 followed by 111.
[[nodiscard]] bool forbidden_fragment_check(const IntersectionArray& a);

/// Torus shapes searched by torus_search, in order: even H, W with
/// H*W <= cell_max, by increasing H*W then H.
[[nodiscard]] std::vector<std::pair<int, int>> torus_shapes(int cell_max, int min_cells = 0);

/// First exact solution on the H x W torus with (0,0) coloured 0.
[[nodiscard]] std::optional<PeriodicColoring> torus_solve(const IntersectionArray& a, int height, int width,
                                                          SearchStats* stats = nullptr);

/// Every exact solution on the H x W torus with (0,0) coloured 0, stopping
/// once visit returns false.
void torus_solutions(const IntersectionArray& a, int height, int width,
                     const std::function<bool(const PeriodicColoring&)>& visit);

/// First witness over torus_shapes(cell_max), re-verified independently.
[[nodiscard]] std::optional<PeriodicColoring> torus_search(const IntersectionArray& a, int cell_max,
                                                           SearchStats* stats = nullptr, int min_cells = 0);

/// Pairwise nonequivalent witnesses found over all tori up to cell_max,
/// capped at max_classes.
[[nodiscard]] std::vector<PeriodicColoring> distinct_colorings(const IntersectionArray& a, int cell_max,
                                                               std::size_t max_classes);

// ---------------------------------------------------------------------------

struct Feasible {
    PeriodicColoring witness;
};
struct InfeasibleAtRadius {
    int radius;
};
struct Undecided {
    int max_radius;
    int cell_max;
};
using SearchOutcome = std::variant<Feasible, InfeasibleAtRadius, Undecided>;

struct Budgets {
    int max_radius = 6;
    int cell_max = 256;
    int quick_cells = 64;  // first torus pass, before refutation
};

/// torus_search(quick) -> refute -> torus_search(full).
[[nodiscard]] SearchOutcome decide(const IntersectionArray& a, const Budgets& budgets);

struct ClassEntry {
    IntersectionArray array;
    IntersectionArray reversed;
    SearchOutcome outcome;
    std::string witness_key;  // canonical key when feasible
};

struct Classification {
    int colors = 0;
    Budgets budgets;
    std::vector<ClassEntry> entries;  // sorted by formatted array

    [[nodiscard]] int count_feasible() const;
    [[nodiscard]] int count_infeasible() const;
    [[nodiscard]] int count_undecided() const;
};

[[nodiscard]] Classification classify(int colors, const Budgets& budgets, int threads = 1);

[[nodiscard]] std::string status_word(const SearchOutcome& outcome);

/// One line per class plus a summary block. When witness_files is given,
/// entry i's witness path is printed after its status.
[[nodiscard]] std::string format_report(const Classification& c, const std::vector<std::string>& witness_files = {});
/// JSON lines: one object per class, then {"summary": {...}}.
[[nodiscard]] std::string format_report_jsonl(const Classification& c,
                                              const std::vector<std::string>& witness_files = {});

}  // namespace hexcr
