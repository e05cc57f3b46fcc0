#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sca/rules.hpp"
#include "sca/step.hpp"

namespace sca {

// Unreduced speed symbol. 2/6 and 1/3 are distinct speeds; valuation()
// collapses them to one rational.
struct Speed {
    long long displacement = 0;  // leftward positive, over one period
    long long period_len = 1;

    std::string str() const;
    bool operator==(const Speed&) const = default;
};

// Exact rational, positive denominator, lowest terms.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    std::string str() const;
    bool operator==(const Rational&) const = default;
};

bool operator<(const Rational& a, const Rational& b);

Rational valuation(const Speed& s);

// Leftward displacement of the given strand (1-based, in position order) on
// its way out of g: straight strands and crossing members 0, a lone left
// turn +1, a lone right turn -1.
int end_index(int strand, const Generation& g);

// Sum of strand 1's end indices over the whole list.
long long global_end_index(const Pattern& p);

// One minimal cycle of a periodic evolution, laid out absolutely. After the
// last generation the pattern continues translated by `shift`; for any cycle
// produced here shift == -global_end_index(period).
struct PeriodInfo {
    int preperiod = 0;
    std::vector<Generation> period;
    long long shift = 0;
    int repetitions = 1;

    std::size_t length() const { return period.size(); }
    int strands() const { return period.empty() ? 0 : period.front().strand_count(); }
    int width() const;  // max generation width over the cycle

    Pattern unfold(int times) const;   // one traversal per copy, each shifted
    PeriodInfo rotated(int k) const;   // same cycle entered k generations later
    std::string serialize() const;     // generation strings joined by ';'

    bool operator==(const PeriodInfo&) const = default;
};

Speed speed(const PeriodInfo& periodic);

// Simulates up to `budget` steps and cuts the cycle at the first recurrence
// of a translation-forgetting generation key.
std::optional<PeriodInfo> find_period(const Generation& init, TurningRule t,
                                      CrossingRule c, long long budget);

// Shortest prefix a with a^h verbatim equal to the list; the list itself
// when no shorter prefix works.
Pattern per_of_list(const Pattern& p);

// A chain of empty cells, one per period generation, each a child cell of
// the one before, starting strictly between strands of generation 1.
struct NullChain {
    std::vector<long long> cells;  // absolute cell index per generation

    bool operator==(const NullChain&) const = default;
};

std::optional<NullChain> null_chain_witness(const std::vector<Generation>& period);
bool null_chain_exists(const std::vector<Generation>& period);

struct NoRule {
    enum class Reason { Discontinuous, Conflict };

    Reason reason = Reason::Discontinuous;
    std::size_t generation = 0;  // 1-based offending child row (Discontinuous)
    long long cell = 0;          // absolute cell index (Discontinuous)
    std::vector<int> bits;       // conflicting bits, ascending (Conflict)

    std::string str() const;
};

struct InferredRule {
    std::optional<GenericRule> rule;
    std::optional<NoRule> failure;

    bool ok() const { return rule.has_value(); }
};

// Reads each consecutive pair: a strand-flow break is Discontinuous, a
// configuration observed both straight and turning is Conflict, otherwise
// every exercised configuration fixes one bit and the rest stay undetermined.
InferredRule infer_turning_rule(const Pattern& p);

// Each crossing cell fixes its conditioning bit (Z = 1, S = 0).
InferredRule infer_crossing_rule(const Pattern& p);

struct GliderReport {
    bool is_repeating = false;
    bool is_glider = false;
    Speed speed;
    int width = 0;
    bool pure = false;
    std::optional<GenericRule> nested_rule;
    std::optional<NullChain> null_chain;

    PeriodInfo period;
    std::optional<GenericRule> turning;   // inferred on the doubled period
    std::optional<GenericRule> crossing;  // inferred on the doubled period
};

GliderReport is_glider(const PeriodInfo& periodic);
std::optional<GliderReport> is_glider(const Generation& init, TurningRule t,
                                      CrossingRule c, long long budget);

// Positive speed: pure iff generic bit 1 is 0 or X. Negative speed: bit 3.
// Throws std::invalid_argument at valuation 0.
bool is_pure(const Speed& s, const GenericRule& turning);
bool is_pure(const GliderReport& r);

// Keeps the k strands of lowest (resp. highest) first-generation rank,
// traced by the displacement law, re-formed on the lattice, with the minimal
// period recomputed. The cycle is traversed as often as the strand order
// permutation requires to close.
PeriodInfo left_subpattern(const PeriodInfo& g, int k);
PeriodInfo right_subpattern(const PeriodInfo& g, int k);

// Same extraction over a finite run, no period machinery.
Pattern left_subpattern(const Pattern& p, int k);
Pattern right_subpattern(const Pattern& p, int k);

struct NestedResult {
    std::optional<GenericRule> rule;  // meet over all k on success
    int failed_k = 0;                 // first k whose subpattern is no glider
    bool contradiction = false;       // subpattern rules have empty meet

    bool ok() const { return rule.has_value(); }
};

// Positive speed takes left subpatterns, negative right; every k from 1 to n
// must be a glider and their inferred rules must meet.
NestedResult is_nested_under(const PeriodInfo& glider);

// All rotations of the cycle; entries past the seam are translated by the
// cycle's own shift (-global_end_index).
std::vector<Pattern> cyclic_permutations(const std::vector<Generation>& period);

// cyclic_permutations deduplicated structurally, first occurrence kept.
std::vector<Pattern> shift_set(const std::vector<Generation>& period);

// 1-based inclusive sub-list.
Pattern slice(const Pattern& p, std::size_t i, std::size_t j);

// An element of a pure-glider listing: a period anchored at base 0, the
// generic turning rule it runs under, and its width.
struct GliderDescription {
    std::vector<Generation> period;
    GenericRule turning{GenericRule::Kind::Turning};
    int width = 0;

    static GliderDescription make(const PeriodInfo& info, const GenericRule& turning);

    Speed speed() const;
    std::string line() const;

    bool operator==(const GliderDescription&) const = default;
};

bool operator<(const GliderDescription& a, const GliderDescription& b);

int pattern_width(const Pattern& p);

}  // namespace sca
