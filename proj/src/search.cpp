#include "hexcr/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "hexcr/board.hpp"
#include "hexcr/kernels.hpp"

namespace hexcr {

namespace {

// Depth-first search with full propagation at every node. Branches on the
// real cell with the fewest remaining colours (lowest index on ties),
// trying colours in increasing order.
class Backtracker {
public:
    using Visit = std::function<bool(const std::vector<std::uint32_t>&)>;  // true = stop

    Backtracker(const Board& board, const IntersectionArray& a)
        : board_(board), table_(make_star_table(a)), kernels_(kernels::active_kernels()) {}

    bool run(std::vector<std::uint32_t> initial, const Visit& visit, SearchStats* stats) {
        stack_.assign(1, std::move(initial));
        visit_ = &visit;
        stats_ = stats;
        return dfs(0);
    }

private:
    bool dfs(std::size_t depth) {
        if (stack_.size() <= depth + 1) stack_.resize(depth + 2);
        if (!propagate(kernels_, table_, board_, stack_[depth], scratch_)) return false;
        const std::vector<std::uint32_t>& dom = stack_[depth];

        std::size_t best = board_.cells();
        int best_size = 64;
        for (std::size_t i = 0; i < board_.cells(); ++i) {
            const int size = std::popcount(dom[i]);
            if (size > 1 && size < best_size) {
                best = i;
                best_size = size;
                if (size == 2) break;
            }
        }
        if (best == board_.cells()) return (*visit_)(dom);
        if (stats_) ++stats_->nodes;

        for (std::uint32_t rest = dom[best]; rest; rest &= rest - 1) {
            stack_[depth + 1] = stack_[depth];
            stack_[depth + 1][best] = rest & (~rest + 1);
            if (dfs(depth + 1)) return true;
        }
        return false;
    }

    const Board& board_;
    kernels::StarTable table_;
    const kernels::KernelSet& kernels_;
    std::vector<std::vector<std::uint32_t>> stack_;
    std::vector<std::uint32_t> scratch_;
    const Visit* visit_ = nullptr;
    SearchStats* stats_ = nullptr;
};

PeriodicColoring to_coloring(const Board& board, int colors, const std::vector<std::uint32_t>& dom) {
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(board.height()) * board.width());
    for (std::size_t i = 0; i < board.cells(); ++i) {
        const Node n = board.node(i);
        cells[static_cast<std::size_t>(n.r) * board.width() + n.c] = static_cast<std::uint8_t>(std::countr_zero(dom[i]));
    }
    return {board.height(), board.width(), colors, std::move(cells)};
}

std::vector<std::uint32_t> torus_start(const Board& board, const IntersectionArray& a) {
    std::vector<std::uint32_t> dom(board.padded(), (1u << a.k()) - 1);
    dom[*board.index_of(kOrigin)] = 1u;
    return dom;
}

}  // namespace

bool ball_consistent(const IntersectionArray& a, int radius, SearchStats* stats) {
    const Board board = Board::ball(radius);
    std::vector<std::uint32_t> dom(board.padded(), (1u << a.k()) - 1);
    dom[0] = 1u;
    if (radius >= 1) {
        // the origin's stabiliser permutes its three edges freely
        const auto row = a.neighbor_multiset(0);
        for (int t = 0; t < 3; ++t) dom[board.neighbor(0, kDirections[t])] = 1u << row[t];
    }
    Backtracker bt(board, a);
    return bt.run(std::move(dom), [](const auto&) { return true; }, stats);
}

std::optional<int> refute(const IntersectionArray& a, int max_radius, SearchStats* stats) {
    if (max_radius < 1) throw std::invalid_argument("refutation radius must be >= 1");
    for (int r = 1; r <= max_radius; ++r) {
        if (!ball_consistent(a, r, stats)) return r;
    }
    return std::nullopt;
}

bool forbidden_fragment_check(const IntersectionArray& a) {
    auto row_is = [&](int i, int c, int aa, int b) { return a.c(i) == c && a.a(i) == aa && a.b(i) == b; };
    for (int i = 1; i + 2 < a.k(); ++i) {
        if (row_is(i, 1, 1, 1) && row_is(i + 1, 1, 0, 2)) return true;
        if (row_is(i, 2, 0, 1) && row_is(i + 1, 1, 1, 1)) return true;
    }
    return false;
}

std::vector<std::pair<int, int>> torus_shapes(int cell_max, int min_cells) {
    std::vector<std::pair<int, int>> out;
    for (int h = 2; 2 * h <= cell_max; h += 2)
        for (int w = 2; h * w <= cell_max; w += 2)
            if (h * w >= min_cells) out.emplace_back(h, w);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::pair(x.first * x.second, x.first) < std::pair(y.first * y.second, y.first);
    });
    return out;
}

std::optional<PeriodicColoring> torus_solve(const IntersectionArray& a, int height, int width, SearchStats* stats) {
    const Board board = Board::torus(height, width, Board::Order::Bfs);
    Backtracker bt(board, a);
    std::optional<PeriodicColoring> found;
    bt.run(torus_start(board, a),
           [&](const std::vector<std::uint32_t>& dom) {
               found = to_coloring(board, a.k(), dom);
               return true;
           },
           stats);
    return found;
}

void torus_solutions(const IntersectionArray& a, int height, int width,
                     const std::function<bool(const PeriodicColoring&)>& visit) {
    const Board board = Board::torus(height, width, Board::Order::Bfs);
    Backtracker bt(board, a);
    bt.run(torus_start(board, a),
           [&](const std::vector<std::uint32_t>& dom) { return !visit(to_coloring(board, a.k(), dom)); }, nullptr);
}

std::optional<PeriodicColoring> torus_search(const IntersectionArray& a, int cell_max, SearchStats* stats,
                                             int min_cells) {
    for (const auto& [h, w] : torus_shapes(cell_max, min_cells)) {
        auto found = torus_solve(a, h, w, stats);
        if (!found) continue;
        const auto m = parameter_matrix(*found);
        if (!is_distance_regular(*found) || !std::holds_alternative<ParameterMatrix>(m) ||
            std::get<ParameterMatrix>(m) != a.matrix()) {
            throw std::logic_error("torus witness for " + format_array(a) + " failed re-verification");
        }
        return found;
    }
    return std::nullopt;
}

std::vector<PeriodicColoring> distinct_colorings(const IntersectionArray& a, int cell_max, std::size_t max_classes) {
    std::vector<PeriodicColoring> out;
    std::set<std::string> keys;
    for (const auto& [h, w] : torus_shapes(cell_max)) {
        torus_solutions(a, h, w, [&](const PeriodicColoring& c) {
            if (keys.insert(canonical_key(c)).second) out.push_back(c);
            return out.size() < max_classes;
        });
        if (out.size() >= max_classes) break;
    }
    return out;
}

// ---------------------------------------------------------------------------

SearchOutcome decide(const IntersectionArray& a, const Budgets& budgets) {
    const int quick = std::min(budgets.quick_cells, budgets.cell_max);
    if (auto w = torus_search(a, quick)) return Feasible{std::move(*w)};
    if (auto r = refute(a, budgets.max_radius)) return InfeasibleAtRadius{*r};
    if (auto w = torus_search(a, budgets.cell_max, nullptr, quick + 1)) return Feasible{std::move(*w)};
    return Undecided{budgets.max_radius, budgets.cell_max};
}

int Classification::count_feasible() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                          [](const ClassEntry& e) { return std::holds_alternative<Feasible>(e.outcome); }));
}

int Classification::count_infeasible() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const ClassEntry& e) {
        return std::holds_alternative<InfeasibleAtRadius>(e.outcome);
    }));
}

int Classification::count_undecided() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                          [](const ClassEntry& e) { return std::holds_alternative<Undecided>(e.outcome); }));
}

Classification classify(int colors, const Budgets& budgets, int threads) {
    if (colors < 2) throw std::invalid_argument("classification needs at least 2 colors");
    const std::vector<IntersectionArray> candidates = enumerate_candidates(colors, true);
    std::vector<std::optional<ClassEntry>> slots(candidates.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < candidates.size(); i = next++) {
            SearchOutcome outcome = decide(candidates[i], budgets);
            std::string key;
            if (const auto* f = std::get_if<Feasible>(&outcome)) key = canonical_key(f->witness);
            slots[i] = ClassEntry{candidates[i], reverse(candidates[i]), std::move(outcome), std::move(key)};
        }
    };
    const int n = std::max(1, threads);
    std::vector<std::jthread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();

    Classification out;
    out.colors = colors;
    out.budgets = budgets;
    for (auto& s : slots) out.entries.push_back(std::move(*s));
    return out;
}

std::string status_word(const SearchOutcome& outcome) {
    if (std::holds_alternative<Feasible>(outcome)) return "FEASIBLE";
    if (const auto* i = std::get_if<InfeasibleAtRadius>(&outcome)) return "INFEASIBLE@" + std::to_string(i->radius);
    return "UNDECIDED";
}

namespace {

std::size_t distinct_witnesses(const Classification& c) {
    std::set<std::string> keys;
    for (const auto& e : c.entries)
        if (!e.witness_key.empty()) keys.insert(e.witness_key);
    return keys.size();
}

}  // namespace

std::string format_report(const Classification& c, const std::vector<std::string>& witness_files) {
    std::string out;
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
        const ClassEntry& e = c.entries[i];
        const std::string name = format_array(e.array);
        const std::string rev = format_array(e.reversed);
        out += name + " " + status_word(e.outcome);
        if (i < witness_files.size() && !witness_files[i].empty()) out += " " + witness_files[i];
        if (rev != name) out += " reverse=" + rev;
        out += "\n";
    }
    out += "# colors " + std::to_string(c.colors) + "\n";
    out += "# budgets refute-radius=" + std::to_string(c.budgets.max_radius) +
           " torus-cells=" + std::to_string(c.budgets.cell_max) + "\n";
    out += "# classes " + std::to_string(c.entries.size()) + "\n";
    out += "# feasible " + std::to_string(c.count_feasible()) + "\n";
    out += "# infeasible " + std::to_string(c.count_infeasible()) + "\n";
    out += "# undecided " + std::to_string(c.count_undecided()) + "\n";
    out += "# distinct-witnesses " + std::to_string(distinct_witnesses(c)) + "\n";
    return out;
}

std::string format_report_jsonl(const Classification& c, const std::vector<std::string>& witness_files) {
    using nlohmann::json;
    std::string out;
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
        const ClassEntry& e = c.entries[i];
        json j;
        j["array"] = format_array(e.array);
        if (format_array(e.reversed) != format_array(e.array)) j["reverse"] = format_array(e.reversed);
        if (std::holds_alternative<Feasible>(e.outcome)) {
            j["status"] = "feasible";
        } else if (const auto* inf = std::get_if<InfeasibleAtRadius>(&e.outcome)) {
            j["status"] = "infeasible";
            j["radius"] = inf->radius;
        } else {
            j["status"] = "undecided";
        }
        if (i < witness_files.size() && !witness_files[i].empty()) j["witness_file"] = witness_files[i];
        out += j.dump() + "\n";
    }
    json s;
    s["colors"] = c.colors;
    s["refute_radius"] = c.budgets.max_radius;
    s["torus_cells"] = c.budgets.cell_max;
    s["classes"] = c.entries.size();
    s["feasible"] = c.count_feasible();
    s["infeasible"] = c.count_infeasible();
    s["undecided"] = c.count_undecided();
    s["distinct_witnesses"] = distinct_witnesses(c);
    out += json{{"summary", s}}.dump() + "\n";
    return out;
}

}  // namespace hexcr
