#pragma once

// Finite boards the kernels run on: the torus quotient of an H x W
// fundamental domain, and a ball with a wildcard shell.

#include <cstdint>
#include <optional>
#include <vector>

#include "hexcr/arrays.hpp"
#include "hexcr/hexgrid.hpp"
#include "hexcr/kernels.hpp"

namespace hexcr {

class Board {
public:
    enum class Order { RowMajor, Bfs };

    /// H x W torus; every cell constrained. H and W must be even and >= 2.
    static Board torus(int height, int width, Order order);

    /// ball(origin, radius), every cell constrained; neighbours outside the
    /// ball share one unconstrained wildcard cell.
    static Board ball(int radius);

    [[nodiscard]] std::size_t cells() const { return nodes_.size(); }  // real cells, wildcard excluded
    [[nodiscard]] std::size_t padded() const { return constrained_.size(); }
    [[nodiscard]] kernels::BoardView view() const;

    [[nodiscard]] Node node(std::size_t i) const { return nodes_[i]; }
    [[nodiscard]] const std::vector<Node>& nodes() const { return nodes_; }
    /// Index of a node (reduced mod the torus, if any); nullopt if outside.
    [[nodiscard]] std::optional<std::size_t> index_of(Node n) const;
    [[nodiscard]] std::int32_t neighbor(std::size_t i, Direction g) const { return nbr_[static_cast<int>(g)][i]; }

    [[nodiscard]] int height() const { return height_; }
    [[nodiscard]] int width() const { return width_; }

private:
    Board() = default;
    void finish();

    int height_ = 0;  // torus dims; 0 for a ball
    int width_ = 0;
    int radius_ = 0;
    std::vector<Node> nodes_;
    std::vector<std::int32_t> slot_of_;  // torus: row-major position -> index
    std::vector<std::int32_t> nbr_[3];
    std::vector<std::int32_t> back_[3];
    std::vector<std::uint32_t> constrained_;
};

[[nodiscard]] kernels::StarTable make_star_table(const IntersectionArray& a);

/// Runs support/prune sweeps to a fixpoint. Returns false on a wipe-out.
/// scratch is resized as needed.
bool propagate(const kernels::KernelSet& ks, const kernels::StarTable& table, const Board& board,
               std::vector<std::uint32_t>& domain, std::vector<std::uint32_t>& scratch);

}  // namespace hexcr
