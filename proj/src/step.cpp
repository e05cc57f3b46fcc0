#include "sca/step.hpp"

#include <algorithm>

namespace sca {

Config effective_config(CellContent left_parent, CellContent right_parent) {
    ParentClass l = ParentClass::E;
    if (right_slot(left_parent) == Strand::Straight) {
        l = ParentClass::S;
    } else if (left_slot(left_parent) == Strand::TurnRight) {
        l = ParentClass::T;
    }
    ParentClass r = ParentClass::E;
    if (left_slot(right_parent) == Strand::Straight) {
        r = ParentClass::S;
    } else if (right_slot(right_parent) == Strand::TurnLeft) {
        r = ParentClass::T;
    }
    return Config{l, r, config_bit(l, r)};
}

ParentClass raw_class(CellContent c) {
    if (c == CellContent::Empty) {
        return ParentClass::E;
    }
    if (left_slot(c) == Strand::Straight || right_slot(c) == Strand::Straight) {
        return ParentClass::S;
    }
    return ParentClass::T;
}

Generation step(const Generation& g, TurningRule t, CrossingRule c) {
    if (g.empty()) {
        return g;
    }
    // Children span one cell beyond the run on each side; anything further
    // out has (E,E) parents.
    long long first_child = g.base() - 1;
    std::size_t child_count = g.width() + 1;
    std::vector<CellContent> out(child_count, CellContent::Empty);
    for (std::size_t k = 0; k < child_count; ++k) {
        long long cb = first_child + 2 * static_cast<long long>(k);
        Config cfg = effective_config(g.at(cb - 1), g.at(cb + 1));
        if (cfg.left == ParentClass::E && cfg.right == ParentClass::E) {
            continue;
        }
        bool left_in = cfg.left != ParentClass::E;
        bool right_in = cfg.right != ParentClass::E;
        if (!t.bit(cfg.bit)) {
            out[k] = cell_from_slots(left_in ? Strand::Straight : Strand::None,
                                     right_in ? Strand::Straight : Strand::None);
        } else if (left_in && right_in) {
            int cbit = config_bit(raw_class(g.at(cb - 3)), raw_class(g.at(cb + 3)));
            out[k] = c.bit(cbit) ? CellContent::CrossingZ : CellContent::CrossingS;
        } else if (left_in) {
            out[k] = CellContent::RightTurn;
        } else {
            out[k] = CellContent::LeftTurn;
        }
    }
    return Generation(first_child, std::move(out));
}

Pattern generate(const Generation& init, TurningRule t, CrossingRule c, std::size_t count) {
    Pattern p;
    p.reserve(count);
    p.push_back(init);
    for (std::size_t i = 1; i < count; ++i) {
        p.push_back(step(p.back(), t, c));
    }
    return p;
}

std::optional<Violation> continuity_check(const Pattern& p) {
    for (std::size_t i = 1; i < p.size(); ++i) {
        const Generation& prev = p[i - 1];
        const Generation& cur = p[i];
        if (prev.empty() && cur.empty()) {
            continue;
        }
        if (!prev.empty() && !cur.empty() && prev.parity() == cur.parity()) {
            return Violation{i + 1, cur.base(), "phase"};
        }
        // Child cells of prev, plus cur's own run to catch strands appearing
        // outside it.
        long long lo = prev.empty() ? cur.base() : prev.base() - 1;
        long long hi = prev.empty() ? cur.base() + 2 * (static_cast<long long>(cur.width()) - 1)
                                    : prev.base() - 1 + 2 * static_cast<long long>(prev.width());
        if (!prev.empty() && !cur.empty()) {
            lo = std::min(lo, cur.base());
            hi = std::max(hi, cur.base() + 2 * (static_cast<long long>(cur.width()) - 1));
        }
        for (long long cb = lo; cb <= hi; cb += 2) {
            Config cfg = effective_config(prev.at(cb - 1), prev.at(cb + 1));
            CellContent obs = cur.at(cb);
            bool want_l = cfg.left != ParentClass::E;
            bool want_r = cfg.right != ParentClass::E;
            if (want_l != (left_slot(obs) != Strand::None) ||
                want_r != (right_slot(obs) != Strand::None)) {
                return Violation{i + 1, cb, "occupancy"};
            }
        }
    }
    return std::nullopt;
}

Pattern compose(const Pattern& a, const Pattern& b) {
    Pattern out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace sca
