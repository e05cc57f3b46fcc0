#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sca/analysis.hpp"

namespace sca {

// Exhaustive search space: every trimmed initial generation with `strands`
// strands over at most `max_width` cells, every turning rule with bit 4 = 0
// admitted by the filter, and both orientations of crossing bit 4. A crossing
// formed between two lone strands sits under empty outer cells, so bit 4 is
// the only crossing bit a 2-strand pattern can consult, and orientation never
// feeds back into strand motion.
struct OracleConfig {
    int strands = 1;
    int max_width = 2;        // cells
    long long budget = 64;    // generations granted to find_period
    std::optional<GenericRule> turning_filter;
    std::optional<Generation> only_init;
};

// One shift-class of repeating patterns: the canonical rotation of the period
// plus the rules inferred from the doubled period and the unreduced speed.
struct OracleClass {
    std::vector<Generation> period;  // canonical rotation, first base 0
    GenericRule turning{GenericRule::Kind::Turning};
    GenericRule crossing{GenericRule::Kind::Crossing};
    Speed speed;

    std::string line() const;
    bool operator==(const OracleClass&) const = default;
};

bool operator<(const OracleClass& a, const OracleClass& b);

struct OracleStats {
    std::size_t runs = 0;         // (init, turning, crossing) triples simulated
    std::size_t no_period = 0;    // budget exhausted before a recurrence
    std::size_t null_chains = 0;  // periodic but split by a null chain
};

// All trimmed generations with n strands over at most `max_width` cells,
// base 0. Other bases are translates and find the same shift-classes.
std::vector<Generation> initial_generations(int strands, int max_width);

// Canonical shift-class representative: every rotation of the cycle is
// translated to put its first generation at cell 0; the one with the least
// serialization wins.
std::vector<Generation> canonical_rotation(const std::vector<Generation>& period);

std::vector<OracleClass> oracle_enumerate(const OracleConfig& cfg,
                                          OracleStats* stats = nullptr);

// Expected classification tables: 6 shift-classes for one strand, 26 for two.
std::vector<OracleClass> reference_table(int strands);

// Oracle output matched one-to-one against reference_table(strands).
struct Classification {
    std::vector<OracleClass> classes;     // oracle output, sorted
    std::size_t matched = 0;
    std::vector<std::string> missing;     // expected lines the oracle lacks
    std::vector<std::string> unexpected;  // oracle lines the table lacks

    bool ok() const { return missing.empty() && unexpected.empty(); }
};

Classification classify_small(int strands);

// Pure-glider listings. Sorted and duplicate-free; every member's period is
// anchored at base 0 and every rotation of a member is itself a member.
using VSet = std::vector<GliderDescription>;

struct ExtendStats {
    std::size_t tuples = 0;               // (description, rule, beta) triples
    std::size_t rejected_crossing = 0;
    std::size_t rejected_divergence = 0;  // left strands left the alpha orbit
    std::size_t rejected_budget = 0;      // no repeated generation in budget
    std::size_t rejected_split = 0;       // repeating but not a glider
    double wall_seconds = 0;
};

// Placements of strand n+1 near alpha's rightmost strand: doubling its cell
// to [s,s], or a lone s/l/r in a slot of a cell at most `gap` cell indices
// beyond. Row cells sit on every other index, so gap 4 means two cells away.
std::vector<Generation> beta_candidates(const Generation& alpha, int gap = 4);

// One extension step V_n -> V_(n+1). Simulates every candidate under every
// completion of its description's rule with the all-S crossing rule; keeps
// runs that recur without crossings while their left strands track the alpha
// orbit, and emits each rotation of the found period under the meet of its
// subpattern inferences. Negative-speed descriptions extend leftward via
// reflection. jobs > 1 partitions descriptions; the result is independent of
// the partition.
VSet extend_pure(const VSet& v, int jobs = 1, long long budget_multiplier = 1,
                 ExtendStats* stats = nullptr);

// V_1 from the bounded oracle, then extend_pure applied n-1 times.
VSet enumerate_pure(int strands, int jobs = 1, long long budget_multiplier = 1);

}  // namespace sca
