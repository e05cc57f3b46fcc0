#include "sca/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <iterator>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "sca/step.hpp"
#include "sca/text.hpp"

namespace sca {

namespace {

std::string serialize_rows(const std::vector<Generation>& rows) {
    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ';';
        out += serialize_generation(rows[i]);
    }
    return out;
}

PeriodInfo as_period(std::vector<Generation> rows) {
    PeriodInfo info;
    info.shift = -global_end_index(rows);
    info.period = std::move(rows);
    return info;
}

bool has_crossing(const Generation& g) {
    for (CellContent c : g.cells())
        if (is_crossing(c)) return true;
    return false;
}

// The k leftmost strands of a non-crossing row, kept in place.
Generation keep_left(const Generation& g, int k) {
    const std::vector<long long> pos = g.strand_positions();
    assert(k >= 0 && static_cast<std::size_t>(k) <= pos.size());
    std::set<long long> kept(pos.begin(), pos.begin() + k);
    std::vector<CellContent> cells;
    cells.reserve(g.width());
    for (std::size_t j = 0; j < g.width(); ++j) {
        const CellContent c = g.cells()[j];
        assert(!is_crossing(c));
        const long long left_pos = g.base() + 2 * static_cast<long long>(j);
        const Strand l = kept.count(left_pos) ? left_slot(c) : Strand::None;
        const Strand r = kept.count(left_pos + 1) ? right_slot(c) : Strand::None;
        cells.push_back(cell_from_slots(l, r));
    }
    return Generation(g.base(), std::move(cells));
}

GliderDescription reflect_description(const GliderDescription& d) {
    std::vector<Generation> rows;
    rows.reserve(d.period.size());
    for (const Generation& g : d.period) rows.push_back(g.reflected());
    return GliderDescription::make(as_period(std::move(rows)), d.turning.reflected());
}

enum class RunReject { None, Crossing, Divergence, Budget };

struct TupleRun {
    RunReject reject = RunReject::Budget;
    std::vector<Generation> h;  // candidate period when reject == None
};

// Runs alpha and beta side by side under (t, all-S). Beta is rejected the
// moment it crosses, stops carrying the alpha orbit as its left strands, or
// outgrows it by more than `width_allowance` cells; a nested glider stays
// within 2|per(alpha)|+4 of the alpha row because its last strand closes to
// within two cells at least once per alpha period.
TupleRun run_tuple(const Generation& alpha0, const Generation& beta0, TurningRule t,
                   long long budget, std::size_t width_allowance) {
    const CrossingRule cross{0};
    const int n = alpha0.strand_count();
    Generation a = alpha0;
    Generation b = beta0;
    std::vector<Generation> rows{beta0};
    std::map<std::string, std::size_t> seen;
    seen.emplace(beta0.normalized_key(), 0);
    for (long long i = 1; i <= budget; ++i) {
        b = step(b, t, cross);
        a = step(a, t, cross);
        if (has_crossing(b)) return {RunReject::Crossing, {}};
        if (b.width() > a.width() + width_allowance || keep_left(b, n) != a)
            return {RunReject::Divergence, {}};
        rows.push_back(b);
        const auto [it, fresh] = seen.emplace(b.normalized_key(), rows.size() - 1);
        if (!fresh) {
            std::vector<Generation> h(rows.begin() + static_cast<std::ptrdiff_t>(it->second),
                                      rows.end() - 1);
            return {RunReject::None, std::move(h)};
        }
    }
    return {RunReject::Budget, {}};
}

constexpr CellContent kContents[] = {
    CellContent::Empty,     CellContent::LeftStraight,   CellContent::RightStraight,
    CellContent::DoubleStraight, CellContent::RightTurn, CellContent::LeftTurn,
    CellContent::CrossingZ, CellContent::CrossingS,
};

void merge_stats(ExtendStats& into, const ExtendStats& part) {
    into.tuples += part.tuples;
    into.rejected_crossing += part.rejected_crossing;
    into.rejected_divergence += part.rejected_divergence;
    into.rejected_budget += part.rejected_budget;
    into.rejected_split += part.rejected_split;
}

}  // namespace

std::string OracleClass::line() const {
    std::string out = serialize_rows(period);
    out += "  turning=";
    out += turning.str();
    out += "  crossing=";
    out += crossing.str();
    out += "  speed=";
    out += speed.str();
    return out;
}

bool operator<(const OracleClass& a, const OracleClass& b) { return a.line() < b.line(); }

std::vector<Generation> initial_generations(int strands, int max_width) {
    std::vector<Generation> out;
    std::vector<CellContent> row;
    const auto emit = [&](auto&& self, int width, int remaining) -> void {
        if (static_cast<int>(row.size()) == width) {
            if (remaining == 0 && row.front() != CellContent::Empty &&
                row.back() != CellContent::Empty)
                out.emplace_back(0, row);
            return;
        }
        for (CellContent c : kContents) {
            if (strand_count(c) > remaining) continue;
            row.push_back(c);
            self(self, width, remaining - strand_count(c));
            row.pop_back();
        }
    };
    for (int w = 1; w <= max_width; ++w) emit(emit, w, strands);
    return out;
}

std::vector<Generation> canonical_rotation(const std::vector<Generation>& period) {
    std::vector<Generation> best;
    std::string best_key;
    for (const Pattern& rot : cyclic_permutations(period)) {
        const long long delta =
            (rot.empty() || rot.front().empty()) ? 0 : -rot.front().base();
        Pattern norm;
        norm.reserve(rot.size());
        for (const Generation& g : rot) norm.push_back(g.translated(delta));
        std::string key = serialize_rows(norm);
        if (best.empty() || key < best_key) {
            best = std::move(norm);
            best_key = std::move(key);
        }
    }
    return best;
}

std::vector<OracleClass> oracle_enumerate(const OracleConfig& cfg, OracleStats* stats) {
    if (cfg.strands < 1 || cfg.max_width < 1 || cfg.budget < 1)
        throw std::invalid_argument("oracle_enumerate: invalid config");
    OracleStats local;
    OracleStats& st = stats ? *stats : local;
    st = OracleStats{};

    std::vector<Generation> inits;
    if (cfg.only_init)
        inits.push_back(*cfg.only_init);
    else
        inits = initial_generations(cfg.strands, cfg.max_width);

    std::vector<TurningRule> turnings;
    turnings.reserve(256);
    for (int bits = 0; bits < 512; ++bits) {
        if (bits & (1 << 4)) continue;
        const TurningRule t{static_cast<std::uint16_t>(bits)};
        if (cfg.turning_filter && !cfg.turning_filter->matches(t)) continue;
        turnings.push_back(t);
    }
    const CrossingRule crossings[2] = {CrossingRule{0}, CrossingRule{1 << 4}};

    std::map<std::string, OracleClass> found;
    for (const Generation& init : inits) {
        for (const TurningRule t : turnings) {
            for (const CrossingRule c : crossings) {
                ++st.runs;
                const auto info = find_period(init, t, c, cfg.budget);
                if (!info) {
                    ++st.no_period;
                    continue;
                }
                if (null_chain_exists(info->period)) {
                    ++st.null_chains;
                    continue;
                }
                std::vector<Generation> canon = canonical_rotation(info->period);
                std::string key = serialize_rows(canon);
                if (found.count(key)) continue;
                const GliderReport rep = is_glider(as_period(canon));
                assert(rep.turning && rep.crossing);
                found.emplace(std::move(key),
                              OracleClass{std::move(canon), *rep.turning, *rep.crossing,
                                          rep.speed});
            }
        }
    }

    std::vector<OracleClass> out;
    out.reserve(found.size());
    for (auto& [key, cls] : found) out.push_back(std::move(cls));
    std::sort(out.begin(), out.end());
    return out;
}

Classification classify_small(int strands) {
    if (strands != 1 && strands != 2)
        throw std::invalid_argument("classify_small covers one and two strands");
    OracleConfig cfg;
    cfg.strands = strands;
    cfg.max_width = strands + 1;
    cfg.budget = strands == 1 ? 64 : 256;

    Classification out;
    out.classes = oracle_enumerate(cfg);

    std::vector<std::string> got;
    got.reserve(out.classes.size());
    for (const OracleClass& c : out.classes) got.push_back(c.line());
    std::vector<std::string> want;
    for (const OracleClass& c : reference_table(strands)) want.push_back(c.line());
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                        std::back_inserter(out.missing));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                        std::back_inserter(out.unexpected));
    out.matched = want.size() - out.missing.size();
    return out;
}

std::vector<Generation> beta_candidates(const Generation& alpha, int gap) {
    std::vector<Generation> out;
    if (alpha.empty()) return out;
    const long long last = alpha.strand_positions().back();
    const long long cell = alpha.base() + 2 * ((last - alpha.base()) / 2);

    if (alpha.at(cell) == CellContent::LeftStraight) {
        std::vector<CellContent> cells(alpha.cells());
        cells.back() = CellContent::DoubleStraight;
        out.emplace_back(alpha.base(), std::move(cells));
    }

    static constexpr CellContent kSingles[] = {
        CellContent::LeftStraight, CellContent::RightStraight,
        CellContent::RightTurn,    CellContent::LeftTurn,
    };
    for (long long target = cell + 2; target - cell <= gap; target += 2) {
        std::vector<CellContent> cells(alpha.cells());
        cells.resize(static_cast<std::size_t>((target - alpha.base()) / 2) + 1,
                     CellContent::Empty);
        for (CellContent c : kSingles) {
            cells.back() = c;
            out.emplace_back(alpha.base(), cells);
        }
    }
    return out;
}

VSet extend_pure(const VSet& v, int jobs, long long budget_multiplier, ExtendStats* stats) {
    const auto started = std::chrono::steady_clock::now();
    ExtendStats local;
    ExtendStats& st = stats ? *stats : local;
    st = ExtendStats{};
    if (jobs < 1) jobs = 1;
    if (budget_multiplier < 1) budget_multiplier = 1;

    const auto process = [budget_multiplier](const GliderDescription& d,
                                             std::set<GliderDescription>& out,
                                             ExtendStats& s) {
        const Rational nu = valuation(d.speed());
        if (nu.num == 0) return;
        const bool negative = nu.num < 0;
        const GliderDescription work = negative ? reflect_description(d) : d;
        const Generation& alpha = work.period.front();
        const long long period_len = static_cast<long long>(work.period.size());
        const std::size_t width_allowance = 2 * work.period.size() + 4;
        const long long budget =
            ((1LL << (3 * (2 + work.width))) + 1) * period_len * budget_multiplier;

        for (const TurningRule t : work.turning.turning_completions()) {
            for (const Generation& beta : beta_candidates(alpha)) {
                ++s.tuples;
                TupleRun run = run_tuple(alpha, beta, t, budget, width_allowance);
                if (run.reject == RunReject::Crossing) {
                    ++s.rejected_crossing;
                    continue;
                }
                if (run.reject == RunReject::Divergence) {
                    ++s.rejected_divergence;
                    continue;
                }
                if (run.reject == RunReject::Budget) {
                    ++s.rejected_budget;
                    continue;
                }
                PeriodInfo hi = as_period(std::move(run.h));
                if (null_chain_exists(hi.period) || valuation(speed(hi)).num == 0) {
                    ++s.rejected_split;
                    continue;
                }
                const NestedResult nested = is_nested_under(hi);
                if (!nested.ok() || !is_pure(speed(hi), *nested.rule)) {
                    ++s.rejected_split;
                    continue;
                }
                for (Pattern& rot : shift_set(hi.period)) {
                    GliderDescription nd =
                        GliderDescription::make(as_period(std::move(rot)), *nested.rule);
                    if (negative) nd = reflect_description(nd);
                    out.insert(std::move(nd));
                }
            }
        }
    };

    std::set<GliderDescription> merged;
    const int workers = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(v.size(), 1)));
    if (workers <= 1) {
        for (const GliderDescription& d : v) process(d, merged, st);
    } else {
        std::vector<std::set<GliderDescription>> outs(static_cast<std::size_t>(workers));
        std::vector<ExtendStats> parts(static_cast<std::size_t>(workers));
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                for (std::size_t i = static_cast<std::size_t>(w); i < v.size();
                     i += static_cast<std::size_t>(workers))
                    process(v[i], outs[static_cast<std::size_t>(w)],
                            parts[static_cast<std::size_t>(w)]);
            });
        }
        for (std::thread& th : threads) th.join();
        for (int w = 0; w < workers; ++w) {
            merged.insert(outs[static_cast<std::size_t>(w)].begin(),
                          outs[static_cast<std::size_t>(w)].end());
            merge_stats(st, parts[static_cast<std::size_t>(w)]);
        }
    }

    st.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return VSet(merged.begin(), merged.end());
}

VSet enumerate_pure(int strands, int jobs, long long budget_multiplier) {
    if (strands < 1) throw std::invalid_argument("enumerate_pure needs at least one strand");

    OracleConfig cfg;
    cfg.strands = 1;
    cfg.max_width = 2;
    cfg.budget = 64;
    std::set<GliderDescription> base;
    for (const OracleClass& cls : oracle_enumerate(cfg)) {
        const GliderReport rep = is_glider(as_period(cls.period));
        if (!rep.is_glider || !rep.pure || !rep.turning) continue;
        if (std::any_of(cls.period.begin(), cls.period.end(), has_crossing)) continue;
        for (Pattern& rot : shift_set(cls.period))
            base.insert(GliderDescription::make(as_period(std::move(rot)), *rep.turning));
    }

    VSet v(base.begin(), base.end());
    for (int n = 1; n < strands; ++n) v = extend_pure(v, jobs, budget_multiplier);
    return v;
}

}  // namespace sca
