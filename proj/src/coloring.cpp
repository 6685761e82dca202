#include "hexcr/coloring.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "hexcr/board.hpp"
#include "hexcr/kernels.hpp"

namespace hexcr {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

void check_dims(int height, int width) {
    if (height <= 0 || width <= 0 || height % 2 || width % 2) {
        throw std::invalid_argument("domain " + std::to_string(height) + "x" + std::to_string(width) +
                                    " must have even positive sides");
    }
}

// BFS over the torus quotient from every cell flagged in sources.
std::vector<int> torus_bfs(int height, int width, const std::vector<bool>& sources) {
    const Board board = Board::torus(height, width, Board::Order::RowMajor);
    std::vector<int> dist(board.cells(), -1);
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < board.cells(); ++i) {
        if (sources[i]) {
            dist[i] = 0;
            queue.push_back(i);
        }
    }
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (Direction g : kDirections) {
            const auto v = static_cast<std::size_t>(board.neighbor(u, g));
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

}  // namespace

// ---------------------------------------------------------------------------

PeriodicColoring::PeriodicColoring(int height, int width, int colors, std::vector<std::uint8_t> cells)
    : height_(height), width_(width), colors_(colors), cells_(std::move(cells)) {
    check_dims(height, width);
    if (colors < 1 || colors > kMaxColors) throw std::invalid_argument("number of colors out of range");
    if (cells_.size() != static_cast<std::size_t>(height) * width) throw std::invalid_argument("wrong cell count");
    std::vector<bool> seen(static_cast<std::size_t>(colors), false);
    for (std::uint8_t v : cells_) {
        if (v >= colors) throw std::invalid_argument("color " + std::to_string(v) + " out of range");
        seen[v] = true;
    }
    for (int i = 0; i < colors; ++i) {
        if (!seen[i]) throw std::invalid_argument("color " + std::to_string(i) + " does not occur");
    }
}

PeriodicColoring PeriodicColoring::from_rows(int colors, const std::vector<std::string>& rows) {
    if (rows.empty()) throw std::invalid_argument("no rows");
    const std::size_t width = rows.front().size();
    std::vector<std::uint8_t> cells;
    for (const auto& row : rows) {
        if (row.size() != width) throw std::invalid_argument("ragged rows");
        for (char ch : row) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("non-digit cell");
            cells.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
    }
    return {static_cast<int>(rows.size()), static_cast<int>(width), colors, std::move(cells)};
}

int PeriodicColoring::at(Node n) const { return cell(mod(n.r, height_), mod(n.c, width_)); }

PeriodicColoring PeriodicColoring::lift(int height, int width) const {
    if (height % height_ || width % width_) throw std::invalid_argument("lift size is not a multiple of the domain");
    std::vector<std::uint8_t> out(static_cast<std::size_t>(height) * width);
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c) out[static_cast<std::size_t>(r) * width + c] = cells_[static_cast<std::size_t>(r % height_) * width_ + c % width_];
    return {height, width, colors_, std::move(out)};
}

std::vector<std::string> PeriodicColoring::rows() const {
    std::vector<std::string> out;
    for (int r = 0; r < height_; ++r) {
        std::string s;
        for (int c = 0; c < width_; ++c) s += static_cast<char>('0' + cell(r, c));
        out.push_back(std::move(s));
    }
    return out;
}

CodeSet::CodeSet(int height, int width, std::vector<bool> members)
    : height_(height), width_(width), members_(std::move(members)) {
    check_dims(height, width);
    if (members_.size() != static_cast<std::size_t>(height) * width) throw std::invalid_argument("wrong cell count");
    if (std::none_of(members_.begin(), members_.end(), [](bool b) { return b; })) {
        throw std::invalid_argument("code is empty");
    }
}

CodeSet CodeSet::color_class(const PeriodicColoring& c, int color) {
    std::vector<bool> members;
    for (std::uint8_t v : c.cells()) members.push_back(v == color);
    return {c.height(), c.width(), std::move(members)};
}

bool CodeSet::contains(Node n) const {
    return members_[static_cast<std::size_t>(mod(n.r, height_)) * width_ + mod(n.c, width_)];
}

// ---------------------------------------------------------------------------

std::string describe(const NotPerfect& w, int colors) {
    auto profile = [&](const std::array<int, kMaxColors>& p) {
        std::string s = "(";
        for (int j = 0; j < colors; ++j) s += (j ? "," : "") + std::to_string(p[j]);
        return s + ")";
    };
    return "color " + std::to_string(w.color) + " nodes " + to_string(w.first) + " and " + to_string(w.second) +
           " have neighbor profiles " + profile(w.first_profile) + " and " + profile(w.second_profile);
}

MatrixOrWitness parameter_matrix(const PeriodicColoring& c) {
    const Board board = Board::torus(c.height(), c.width(), Board::Order::RowMajor);
    const kernels::BoardView view = board.view();
    std::vector<std::uint32_t> colour(view.n, 0), profile(view.n, 0);
    std::copy(c.cells().begin(), c.cells().end(), colour.begin());
    kernels::active_kernels().profile(view, colour.data(), profile.data());

    auto unpack = [&](std::uint32_t p) {
        std::array<int, kMaxColors> out{};
        for (int j = 0; j < c.colors(); ++j) out[j] = static_cast<int>((p >> (2 * j)) & 3u);
        return out;
    };
    std::vector<std::int64_t> first(static_cast<std::size_t>(c.colors()), -1);
    for (std::size_t i = 0; i < board.cells(); ++i) {
        const int col = c.cells()[i];
        if (first[col] < 0) {
            first[col] = static_cast<std::int64_t>(i);
        } else if (profile[i] != profile[first[col]]) {
            const auto f = static_cast<std::size_t>(first[col]);
            return NotPerfect{col, board.node(f), board.node(i), unpack(profile[f]), unpack(profile[i])};
        }
    }
    ParameterMatrix m(c.colors());
    for (int i = 0; i < c.colors(); ++i) {
        const auto row = unpack(profile[first[i]]);
        for (int j = 0; j < c.colors(); ++j) m.at(i, j) = row[j];
    }
    return m;
}

std::vector<int> distances_to_class(const PeriodicColoring& c, int color) {
    std::vector<bool> src;
    for (std::uint8_t v : c.cells()) src.push_back(v == color);
    return torus_bfs(c.height(), c.width(), src);
}

bool is_distance_regular(const PeriodicColoring& c) {
    const auto m = parameter_matrix(c);
    if (!std::holds_alternative<ParameterMatrix>(m)) return false;
    if (!as_intersection_array(std::get<ParameterMatrix>(m))) return false;
    // checked separately from the matrix: class i == distance-i shell of class 0
    const std::vector<int> dist = distances_to_class(c, 0);
    for (std::size_t i = 0; i < dist.size(); ++i) {
        if (dist[i] != c.cells()[i]) return false;
    }
    return true;
}

CapExceeded::CapExceeded(int cap, int max_distance)
    : std::runtime_error("distance " + std::to_string(max_distance) + " exceeds cap " + std::to_string(cap)),
      max_distance_(max_distance) {}

PeriodicColoring distance_coloring(const CodeSet& code, int cap) {
    std::vector<bool> src;
    for (int r = 0; r < code.height(); ++r)
        for (int c = 0; c < code.width(); ++c) src.push_back(code.contains({r, c}));
    const std::vector<int> dist = torus_bfs(code.height(), code.width(), src);
    const int max_d = *std::max_element(dist.begin(), dist.end());
    if (max_d > cap) throw CapExceeded(cap, max_d);
    std::vector<std::uint8_t> cells(dist.begin(), dist.end());
    return {code.height(), code.width(), max_d + 1, std::move(cells)};
}

Regularity is_completely_regular(const CodeSet& code) {
    const PeriodicColoring dc = distance_coloring(code, code.height() * code.width());
    if (dc.colors() > kMaxColors || !is_distance_regular(dc)) return {};
    return {true, as_intersection_array(std::get<ParameterMatrix>(parameter_matrix(dc)))};
}

// ---------------------------------------------------------------------------

ShiftSelection ShiftSelection::from_pattern(const std::string& pattern, const PeriodicColoring& base) {
    if (pattern.empty() || pattern.find_first_not_of("01") != std::string::npos) {
        throw std::invalid_argument("selection pattern must be a nonempty string of 0/1");
    }
    ShiftSelection sel;
    sel.period = 2 * static_cast<int>(pattern.size());
    sel.height = std::lcm(base.height(), sel.period);
    sel.width = std::lcm(base.width(), sel.period);
    for (char ch : pattern) sel.selected.push_back(ch == '1');
    return sel;
}

bool ShiftSelection::selects(const CosetLine& line) const { return selected[mod(line.key(), period) / 2]; }

bool ShiftSelection::empty() const { return std::none_of(selected.begin(), selected.end(), [](bool b) { return b; }); }

ShiftPreconditionError::ShiftPreconditionError(CosetLine l, Node x, Node y)
    : std::runtime_error("coset line " + std::to_string(l.key()) + " is not yzyz-periodic: " + to_string(x) +
                         " and " + to_string(y) + " differ"),
      line(l), a(x), b(y) {}

PeriodicColoring shift_cosets(const PeriodicColoring& c, const ShiftSelection& sel) {
    if (sel.period <= 0 || sel.period % 2 || sel.selected.size() != static_cast<std::size_t>(sel.period / 2) ||
        sel.height % sel.period || sel.width % sel.period) {
        throw std::invalid_argument("selection is not invariant under its domain translations");
    }
    const PeriodicColoring lifted = c.lift(sel.height, sel.width);
    std::vector<std::uint8_t> out(lifted.cells().begin(), lifted.cells().end());
    for (int r = 0; r < sel.height; ++r) {
        for (int col = 0; col < sel.width; ++col) {
            const Node v{r, col};
            const CosetLine line = coset_line(v);
            if (!sel.selects(line)) continue;
            const Node ahead{r + 2, col + 2};
            if (lifted.at(v) != lifted.at(ahead)) throw ShiftPreconditionError(line, v, ahead);
            out[static_cast<std::size_t>(r) * sel.width + col] =
                static_cast<std::uint8_t>(lifted.at(left_multiply(kYzShift, v)));
        }
    }
    return {sel.height, sel.width, c.colors(), std::move(out)};
}

// ---------------------------------------------------------------------------

PeriodicColoring translate(const PeriodicColoring& c, const Translation& t) {
    std::vector<std::uint8_t> out;
    for (int r = 0; r < c.height(); ++r)
        for (int col = 0; col < c.width(); ++col) out.push_back(static_cast<std::uint8_t>(c.at(t.apply({r, col}))));
    return {c.height(), c.width(), c.colors(), std::move(out)};
}

PeriodicColoring reverse_colors(const PeriodicColoring& c) {
    std::vector<std::uint8_t> out;
    for (std::uint8_t v : c.cells()) out.push_back(static_cast<std::uint8_t>(c.colors() - 1 - v));
    return {c.height(), c.width(), c.colors(), std::move(out)};
}

PeriodicColoring transform(const PeriodicColoring& c, const Automorphism& phi) {
    // c o phi is invariant under N*T with N = lcm(H, W), which contains
    // (2N, 0) and (0, 2N); its rectangular periods therefore divide 2N.
    const int span = 2 * std::lcm(c.height(), c.width());
    std::vector<std::uint8_t> win(static_cast<std::size_t>(span) * span);
    for (int r = 0; r < span; ++r)
        for (int col = 0; col < span; ++col)
            win[static_cast<std::size_t>(r) * span + col] = static_cast<std::uint8_t>(c.at(phi({r, col})));
    auto at = [&](int r, int col) { return win[static_cast<std::size_t>(r % span) * span + col % span]; };

    auto smallest = [&](bool rows) {
        for (int p = 2; p < span; p += 2) {
            if (span % p) continue;
            bool ok = true;
            for (int r = 0; r < span && ok; ++r)
                for (int col = 0; col < span && ok; ++col) ok = rows ? at(r + p, col) == at(r, col) : at(r, col + p) == at(r, col);
            if (ok) return p;
        }
        return span;
    };
    const int h = smallest(true);
    const int w = smallest(false);
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(h) * w);
    for (int r = 0; r < h; ++r)
        for (int col = 0; col < w; ++col) out.push_back(at(r, col));
    return {h, w, c.colors(), std::move(out)};
}

std::optional<Automorphism> find_equivalence(const PeriodicColoring& c1, const PeriodicColoring& c2) {
    if (c1.colors() != c2.colors()) return std::nullopt;
    const int n = std::lcm(std::lcm(c1.height(), c1.width()), std::lcm(c2.height(), c2.width()));
    // [0, 2N) x [0, N) is a fundamental domain of N*T, under which both
    // c1 and c2 o phi are invariant.
    for (int pr = 0; pr < c2.height(); ++pr) {
        for (int pc = 0; pc < c2.width(); ++pc) {
            for (const DirectionPerm& perm : all_direction_perms()) {
                const Automorphism phi{{pr, pc}, perm};
                bool ok = true;
                for (int r = 0; r < 2 * n && ok; ++r)
                    for (int col = 0; col < n && ok; ++col) ok = c2.at(phi({r, col})) == c1.at({r, col});
                if (ok) return phi;
            }
        }
    }
    return std::nullopt;
}

bool equivalent(const PeriodicColoring& c1, const PeriodicColoring& c2) { return find_equivalence(c1, c2).has_value(); }

std::string canonical_key(const PeriodicColoring& c) {
    std::string best;
    for (int pr = 0; pr < c.height(); ++pr) {
        for (int pc = 0; pc < c.width(); ++pc) {
            for (const DirectionPerm& perm : all_direction_perms()) {
                const PeriodicColoring img = transform(c, Automorphism{{pr, pc}, perm});
                std::string key = std::to_string(img.height()) + "x" + std::to_string(img.width()) + ":";
                for (std::uint8_t v : img.cells()) key += static_cast<char>('0' + v);
                if (best.empty() || key < best) best = std::move(key);
            }
        }
    }
    return best;
}

}  // namespace hexcr
