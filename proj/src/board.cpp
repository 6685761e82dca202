#include "hexcr/board.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace hexcr {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

Board Board::torus(int height, int width, Order order) {
    if (height < 2 || width < 2 || height % 2 || width % 2) {
        throw std::invalid_argument("torus dimensions must be even and >= 2");
    }
    Board b;
    b.height_ = height;
    b.width_ = width;
    const auto total = static_cast<std::size_t>(height) * width;
    b.slot_of_.assign(total, -1);
    auto pos = [&](Node n) { return static_cast<std::size_t>(mod(n.r, height)) * width + mod(n.c, width); };

    if (order == Order::RowMajor) {
        for (int r = 0; r < height; ++r)
            for (int c = 0; c < width; ++c) b.nodes_.push_back({r, c});
    } else {
        b.nodes_.push_back(kOrigin);
        b.slot_of_[pos(kOrigin)] = 0;
        for (std::size_t head = 0; head < b.nodes_.size(); ++head) {
            for (Node v : neighbors(b.nodes_[head])) {
                const Node red{mod(v.r, height), mod(v.c, width)};
                if (b.slot_of_[pos(red)] >= 0) continue;
                b.slot_of_[pos(red)] = static_cast<std::int32_t>(b.nodes_.size());
                b.nodes_.push_back(red);
            }
        }
    }
    for (std::size_t i = 0; i < b.nodes_.size(); ++i) b.slot_of_[pos(b.nodes_[i])] = static_cast<std::int32_t>(i);
    for (int t = 0; t < 3; ++t) {
        b.nbr_[t].resize(b.nodes_.size());
        for (std::size_t i = 0; i < b.nodes_.size(); ++i) {
            b.nbr_[t][i] = b.slot_of_[pos(step(b.nodes_[i], kDirections[t]))];
        }
    }
    b.constrained_.assign(b.nodes_.size(), ~0u);
    b.finish();
    return b;
}

Board Board::ball(int radius) {
    if (radius < 0) throw std::invalid_argument("ball radius must be nonnegative");
    Board b;
    b.radius_ = radius;
    b.nodes_ = hexcr::ball(kOrigin, radius);
    std::unordered_map<Node, std::int32_t, NodeHash> index;
    for (std::size_t i = 0; i < b.nodes_.size(); ++i) index.emplace(b.nodes_[i], static_cast<std::int32_t>(i));
    const auto wildcard = static_cast<std::int32_t>(b.nodes_.size());
    for (int t = 0; t < 3; ++t) {
        b.nbr_[t].resize(b.nodes_.size() + 1);
        for (std::size_t i = 0; i < b.nodes_.size(); ++i) {
            const auto it = index.find(step(b.nodes_[i], kDirections[t]));
            b.nbr_[t][i] = it == index.end() ? wildcard : it->second;
        }
        b.nbr_[t][wildcard] = wildcard;
    }
    b.constrained_.assign(b.nodes_.size(), ~0u);
    b.constrained_.push_back(0u);
    b.finish();
    return b;
}

void Board::finish() {
    // pad to whole vectors; pads and the wildcard point at themselves
    const std::size_t used = constrained_.size();
    const std::size_t n = (used + kernels::kLanes - 1) / kernels::kLanes * kernels::kLanes;
    constrained_.resize(n, 0u);
    for (auto& nb : nbr_) {
        for (std::size_t i = used; i < n; ++i) nb.push_back(static_cast<std::int32_t>(i));
    }
    for (int t = 0; t < 3; ++t) {
        back_[t].assign(n, 0);
        for (std::size_t v = 0; v < n; ++v) {
            const std::int32_t u = nbr_[t][v];
            int slot = t;  // unconstrained neighbours: any slot reads "everything"
            if (constrained_[u]) {
                for (int s = 0; s < 3; ++s) {
                    if (nbr_[s][u] == static_cast<std::int32_t>(v)) {
                        slot = s;
                        break;
                    }
                }
            }
            back_[t][v] = static_cast<std::int32_t>(n + static_cast<std::size_t>(slot) * n + u);
        }
    }
}

kernels::BoardView Board::view() const {
    kernels::BoardView v;
    v.n = constrained_.size();
    for (int t = 0; t < 3; ++t) {
        v.nbr[t] = nbr_[t].data();
        v.back[t] = back_[t].data();
    }
    v.constrained = constrained_.data();
    return v;
}

std::optional<std::size_t> Board::index_of(Node n) const {
    if (height_ > 0) {
        return static_cast<std::size_t>(slot_of_[static_cast<std::size_t>(mod(n.r, height_)) * width_ + mod(n.c, width_)]);
    }
    const auto it = std::find(nodes_.begin(), nodes_.end(), n);
    if (it == nodes_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - nodes_.begin());
}

kernels::StarTable make_star_table(const IntersectionArray& a) {
    kernels::StarTable table;
    table.all = (1u << a.k()) - 1;
    for (int i = 0; i < a.k(); ++i) {
        auto row = a.neighbor_multiset(i);
        do {
            table.center.push_back(1u << i);
            table.slot0.push_back(1u << row[0]);
            table.slot1.push_back(1u << row[1]);
            table.slot2.push_back(1u << row[2]);
        } while (std::next_permutation(row.begin(), row.end()));
    }
    return table;
}

bool propagate(const kernels::KernelSet& ks, const kernels::StarTable& table, const Board& board,
               std::vector<std::uint32_t>& domain, std::vector<std::uint32_t>& scratch) {
    const kernels::BoardView view = board.view();
    scratch.resize(4 * view.n);
    while (true) {
        ks.support(table, view, domain.data(), scratch.data());
        const kernels::PruneResult r = ks.prune(view, scratch.data(), domain.data());
        if (r.wiped_out) return false;
        if (!r.changed) return true;
    }
}

}  // namespace hexcr
