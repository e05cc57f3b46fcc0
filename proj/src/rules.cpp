#include "sca/rules.hpp"

#include <cassert>

namespace sca {

namespace {

std::string bits_to_str(std::uint16_t bits) {
    std::string s(9, '0');
    for (int i = 0; i < 9; ++i) {
        if ((bits >> i) & 1) {
            s[static_cast<std::size_t>(i)] = '1';
        }
    }
    return s;
}

std::optional<std::uint16_t> str_to_bits(std::string_view s) {
    if (s.size() != 9) {
        return std::nullopt;
    }
    std::uint16_t bits = 0;
    for (int i = 0; i < 9; ++i) {
        char ch = s[static_cast<std::size_t>(i)];
        if (ch == '1') {
            bits |= static_cast<std::uint16_t>(1u << i);
        } else if (ch != '0') {
            return std::nullopt;
        }
    }
    return bits;
}

std::uint16_t reflect_bits(std::uint16_t bits) {
    std::uint16_t out = 0;
    for (int i = 0; i < 9; ++i) {
        if ((bits >> i) & 1) {
            out |= static_cast<std::uint16_t>(1u << reflect_bit_index(i));
        }
    }
    return out;
}

}  // namespace

std::string TurningRule::str() const {
    return bits_to_str(bits);
}

std::string CrossingRule::str() const {
    return bits_to_str(bits);
}

std::optional<TurningRule> parse_turning(std::string_view s) {
    auto bits = str_to_bits(s);
    if (!bits || ((*bits >> 4) & 1)) {
        return std::nullopt;
    }
    return TurningRule{*bits};
}

std::optional<CrossingRule> parse_crossing(std::string_view s) {
    auto bits = str_to_bits(s);
    if (!bits) {
        return std::nullopt;
    }
    return CrossingRule{*bits};
}

TurningRule reflect(TurningRule t) {
    return TurningRule{reflect_bits(t.bits)};
}

CrossingRule reflect(CrossingRule c) {
    // A reflected Z-crossing is an S-crossing, so the decision flips too.
    return CrossingRule{static_cast<std::uint16_t>(reflect_bits(c.bits) ^ 0x1FF)};
}

GenericRule::GenericRule(Kind k) : kind_(k) {
    t_.fill(Tri::Any);
    if (kind_ == Kind::Turning) {
        t_[4] = Tri::Zero;
    }
}

std::optional<GenericRule> GenericRule::parse(Kind k, std::string_view s) {
    if (s.size() != 9) {
        return std::nullopt;
    }
    GenericRule r(k);
    for (int i = 0; i < 9; ++i) {
        char ch = s[static_cast<std::size_t>(i)];
        Tri v;
        if (ch == '0') {
            v = Tri::Zero;
        } else if (ch == '1') {
            v = Tri::One;
        } else if (ch == 'X' || ch == 'x') {
            v = Tri::Any;
        } else {
            return std::nullopt;
        }
        if (k == Kind::Turning && i == 4 && v != Tri::Zero) {
            return std::nullopt;
        }
        r.t_[static_cast<std::size_t>(i)] = v;
    }
    return r;
}

GenericRule GenericRule::of(TurningRule t) {
    GenericRule r(Kind::Turning);
    for (int i = 0; i < 9; ++i) {
        r.t_[static_cast<std::size_t>(i)] = t.bit(i) ? Tri::One : Tri::Zero;
    }
    return r;
}

GenericRule GenericRule::of(CrossingRule c) {
    GenericRule r(Kind::Crossing);
    for (int i = 0; i < 9; ++i) {
        r.t_[static_cast<std::size_t>(i)] = c.bit(i) ? Tri::One : Tri::Zero;
    }
    return r;
}

void GenericRule::set(int i, Tri v) {
    assert(!(kind_ == Kind::Turning && i == 4 && v != Tri::Zero));
    t_[static_cast<std::size_t>(i)] = v;
}

std::string GenericRule::str() const {
    std::string s;
    s.reserve(9);
    for (Tri v : t_) {
        s.push_back(v == Tri::Zero ? '0' : v == Tri::One ? '1' : 'X');
    }
    return s;
}

bool GenericRule::trivial() const {
    for (Tri v : t_) {
        if (v != Tri::Any) {
            return false;
        }
    }
    return true;
}

bool GenericRule::matches(std::uint16_t bits) const {
    for (int i = 0; i < 9; ++i) {
        bool b = (bits >> i) & 1;
        Tri v = t_[static_cast<std::size_t>(i)];
        if ((v == Tri::Zero && b) || (v == Tri::One && !b)) {
            return false;
        }
    }
    return true;
}

bool GenericRule::contains(const GenericRule& finer) const {
    for (int i = 0; i < 9; ++i) {
        Tri coarse = t_[static_cast<std::size_t>(i)];
        if (coarse != Tri::Any && coarse != finer.t_[static_cast<std::size_t>(i)]) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint16_t> GenericRule::completions() const {
    std::vector<int> free;
    std::uint16_t fixed = 0;
    for (int i = 0; i < 9; ++i) {
        Tri v = t_[static_cast<std::size_t>(i)];
        if (v == Tri::One) {
            fixed |= static_cast<std::uint16_t>(1u << i);
        } else if (v == Tri::Any) {
            if (kind_ == Kind::Turning && i == 4) {
                continue;
            }
            free.push_back(i);
        }
    }
    std::vector<std::uint16_t> out;
    out.reserve(1u << free.size());
    for (std::uint32_t m = 0; m < (1u << free.size()); ++m) {
        std::uint16_t bits = fixed;
        for (std::size_t j = 0; j < free.size(); ++j) {
            if ((m >> j) & 1) {
                bits |= static_cast<std::uint16_t>(1u << free[j]);
            }
        }
        out.push_back(bits);
    }
    return out;
}

std::vector<TurningRule> GenericRule::turning_completions() const {
    assert(kind_ == Kind::Turning);
    std::vector<TurningRule> out;
    for (std::uint16_t bits : completions()) {
        out.push_back(TurningRule{bits});
    }
    return out;
}

GenericRule GenericRule::reflected() const {
    GenericRule r(kind_);
    for (int i = 0; i < 9; ++i) {
        Tri v = t_[static_cast<std::size_t>(i)];
        if (kind_ == Kind::Crossing && v != Tri::Any) {
            v = (v == Tri::Zero) ? Tri::One : Tri::Zero;
        }
        r.t_[static_cast<std::size_t>(reflect_bit_index(i))] = v;
    }
    return r;
}

std::optional<GenericRule> meet(const GenericRule& a, const GenericRule& b) {
    assert(a.kind() == b.kind());
    GenericRule r(a.kind());
    for (int i = 0; i < 9; ++i) {
        Tri x = a.at(i);
        Tri y = b.at(i);
        Tri v;
        if (x == Tri::Any) {
            v = y;
        } else if (y == Tri::Any || y == x) {
            v = x;
        } else {
            return std::nullopt;
        }
        r.set(i, v);
    }
    return r;
}

}  // namespace sca
