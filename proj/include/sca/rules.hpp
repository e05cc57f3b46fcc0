#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sca {

// Class of a parent cell seen from a child after deleting the strands that
// do not continue into that child: S straight feed, E nothing, T turning feed.
enum class ParentClass : std::uint8_t { S, E, T };

// Bit layout over (left class, right class):
// SS=0 SE=1 ST=2 ES=3 EE=4 ET=5 TS=6 TE=7 TT=8.
// Rule strings are written with bit 0 leftmost.
constexpr int config_bit(ParentClass l, ParentClass r) {
    return 3 * static_cast<int>(l) + static_cast<int>(r);
}

// Concrete 9-bit rules. Bit value 0 = incoming strands go straight, 1 = they
// turn (a crossing when both slots receive one). Turning rules keep bit 4
// (the EE configuration) at 0: strands are never created.
struct TurningRule {
    std::uint16_t bits = 0;

    bool bit(int i) const { return (bits >> i) & 1; }
    std::string str() const;
    bool operator==(const TurningRule&) const = default;
};

// Bit value 1 = Z-crossing (rightmost over), 0 = S-crossing.
struct CrossingRule {
    std::uint16_t bits = 0;

    bool bit(int i) const { return (bits >> i) & 1; }
    std::string str() const;
    bool operator==(const CrossingRule&) const = default;
};

std::optional<TurningRule> parse_turning(std::string_view s);
std::optional<CrossingRule> parse_crossing(std::string_view s);

// Index exchange under left-right reflection: SS<->SS, SE<->ES, ST<->TS,
// ET<->TE, EE and TT fixed.
constexpr int reflect_bit_index(int i) {
    constexpr int map[9] = {0, 3, 6, 1, 4, 7, 2, 5, 8};
    return map[i];
}

TurningRule reflect(TurningRule t);
CrossingRule reflect(CrossingRule c);

enum class Tri : std::uint8_t { Zero, One, Any };

// A rule with undetermined bits. completions() enumerates the concrete rules
// obtained by substituting every Any independently; turning-kind rules keep
// bit 4 fixed at Zero throughout.
class GenericRule {
public:
    enum class Kind : std::uint8_t { Turning, Crossing };

    explicit GenericRule(Kind k);
    static std::optional<GenericRule> parse(Kind k, std::string_view s);
    static GenericRule of(TurningRule t);
    static GenericRule of(CrossingRule c);

    Kind kind() const { return kind_; }
    Tri at(int i) const { return t_[static_cast<std::size_t>(i)]; }
    void set(int i, Tri v);

    std::string str() const;
    bool trivial() const;  // every bit undetermined

    bool matches(std::uint16_t bits) const;
    bool matches(TurningRule t) const { return matches(t.bits); }
    bool matches(CrossingRule c) const { return matches(c.bits); }

    // completions(finer) is a subset of completions(*this).
    bool contains(const GenericRule& finer) const;

    std::vector<std::uint16_t> completions() const;
    std::vector<TurningRule> turning_completions() const;

    GenericRule reflected() const;

    bool operator==(const GenericRule&) const = default;

private:
    Kind kind_;
    std::array<Tri, 9> t_;
};

// Positionwise meet; Zero against One is a contradiction. Kinds must agree.
std::optional<GenericRule> meet(const GenericRule& a, const GenericRule& b);

}  // namespace sca
