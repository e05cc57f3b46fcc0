#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sca/generation.hpp"
#include "sca/rules.hpp"

namespace sca {

// A finite grid pattern: generations listed oldest first.
using Pattern = std::vector<Generation>;

struct Config {
    ParentClass left;
    ParentClass right;
    int bit;
};

// Parent pair of a child cell, after deleting the strands that do not
// continue into that child. The left parent can feed the child's left slot
// (right-slot s stays, left-slot r moves right); the right parent can feed
// the child's right slot (left-slot s stays, right-slot l moves left).
Config effective_config(CellContent left_parent, CellContent right_parent);

// Raw class of a whole cell: E empty, S holds a straight strand, T holds a
// turning one. Conditions the crossing rule.
ParentClass raw_class(CellContent c);

// One synchronous update. Child cells live on the opposite parity; a strand
// is never created or destroyed. An empty row steps to itself.
Generation step(const Generation& g, TurningRule t, CrossingRule c);

// [init, step(init), ...] with `count` generations in total.
Pattern generate(const Generation& init, TurningRule t, CrossingRule c, std::size_t count);

struct Violation {
    std::size_t generation = 0;  // 1-based index of the offending (child) row
    long long cell = 0;          // absolute cell index
    std::string reason;
};

// Checks that every strand continues per the displacement law, i.e. each
// child cell's slot occupancy equals what effective_config predicts from its
// two parents. Single-row patterns pass.
std::optional<Violation> continuity_check(const Pattern& p);

// Plain concatenation, a's generations first.
Pattern compose(const Pattern& a, const Pattern& b);

// Rule-driven infinite pattern, consumed one generation at a time.
class Stream {
public:
    Stream(Generation init, TurningRule t, CrossingRule c)
        : current_(std::move(init)), t_(t), c_(c) {}

    const Generation& current() const { return current_; }
    const Generation& advance() {
        current_ = step(current_, t_, c_);
        return current_;
    }

private:
    Generation current_;
    TurningRule t_;
    CrossingRule c_;
};

}  // namespace sca
