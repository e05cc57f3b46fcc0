#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sca/cell.hpp"

namespace sca {

// One row of cells on the absolute brick lattice. The cell stored at index k
// has absolute cell index base + 2k and covers strand positions
// (base + 2k, base + 2k + 1); cells of one row sit on every other index, and
// rows of consecutive time steps alternate base parity. Stored trimmed: the
// first and last stored cells bear a strand, interior cells may be empty.
// An all-empty row stores nothing and has base 0.
class Generation {
public:
    Generation() = default;
    Generation(long long base, std::vector<CellContent> cells);

    bool empty() const { return cells_.empty(); }
    long long base() const { return base_; }
    int parity() const { return static_cast<int>(((base_ % 2) + 2) % 2); }
    std::size_t width() const { return cells_.size(); }
    const std::vector<CellContent>& cells() const { return cells_; }

    // Absolute lookup. Indices outside the stored run, and indices of the
    // opposite parity, read as the virtual empty lattice.
    CellContent at(long long cell_index) const;

    int strand_count() const;
    std::vector<long long> strand_positions() const;  // ascending

    Generation translated(long long delta) const;

    // Mirror image about the position-axis origin: the cell covering
    // positions (c, c+1) moves to (-c-1, -c) with its content reflected.
    Generation reflected() const;

    // Cell tokens with the base forgotten; equal keys mean equal up to
    // translation (including parity-changing ones).
    std::string normalized_key() const;

    bool operator==(const Generation&) const = default;

private:
    long long base_ = 0;
    std::vector<CellContent> cells_;
};

}  // namespace sca
