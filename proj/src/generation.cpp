#include "sca/generation.hpp"

#include <algorithm>

namespace sca {

Generation::Generation(long long base, std::vector<CellContent> cells) {
    std::size_t first = 0;
    while (first < cells.size() && cells[first] == CellContent::Empty) {
        ++first;
    }
    if (first == cells.size()) {
        return;  // all empty: canonical empty row
    }
    std::size_t last = cells.size() - 1;
    while (cells[last] == CellContent::Empty) {
        --last;
    }
    base_ = base + 2 * static_cast<long long>(first);
    cells_.assign(cells.begin() + static_cast<std::ptrdiff_t>(first),
                  cells.begin() + static_cast<std::ptrdiff_t>(last + 1));
}

CellContent Generation::at(long long cell_index) const {
    long long off = cell_index - base_;
    if (off < 0 || off % 2 != 0) {
        return CellContent::Empty;
    }
    std::size_t k = static_cast<std::size_t>(off / 2);
    if (k >= cells_.size()) {
        return CellContent::Empty;
    }
    return cells_[k];
}

int Generation::strand_count() const {
    int n = 0;
    for (CellContent c : cells_) {
        n += sca::strand_count(c);
    }
    return n;
}

std::vector<long long> Generation::strand_positions() const {
    std::vector<long long> out;
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        long long c = base_ + 2 * static_cast<long long>(k);
        if (left_slot(cells_[k]) != Strand::None) {
            out.push_back(c);
        }
        if (right_slot(cells_[k]) != Strand::None) {
            out.push_back(c + 1);
        }
    }
    return out;
}

Generation Generation::translated(long long delta) const {
    if (empty()) {
        return *this;
    }
    Generation g = *this;
    g.base_ += delta;
    return g;
}

Generation Generation::reflected() const {
    if (empty()) {
        return *this;
    }
    Generation g;
    g.base_ = -(base_ + 2 * static_cast<long long>(cells_.size() - 1)) - 1;
    g.cells_.reserve(cells_.size());
    for (auto it = cells_.rbegin(); it != cells_.rend(); ++it) {
        g.cells_.push_back(reflect(*it));
    }
    return g;
}

std::string Generation::normalized_key() const {
    std::string key;
    key.reserve(cells_.size() * 2);
    for (CellContent c : cells_) {
        key += token(c);
    }
    return key;
}

}  // namespace sca
