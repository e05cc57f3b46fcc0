#include "sca/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "sca/text.hpp"

namespace sca {

std::string Speed::str() const {
    return std::to_string(displacement) + "/" + std::to_string(period_len);
}

Rational::Rational(long long n, long long d) {
    assert(d != 0);
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const long long g = std::gcd(n < 0 ? -n : n, d);
    num = n / g;
    den = d / g;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
}

Rational valuation(const Speed& s) { return Rational(s.displacement, s.period_len); }

int end_index(int strand, const Generation& g) {
    const auto positions = g.strand_positions();
    if (strand < 1 || static_cast<std::size_t>(strand) > positions.size())
        throw std::out_of_range("end_index: no such strand");
    const long long p = positions[static_cast<std::size_t>(strand - 1)];
    const long long c = (((p % 2) + 2) % 2) == g.parity() ? p : p - 1;
    const CellContent cell = g.at(c);
    if (is_crossing(cell)) return 0;
    const Strand sym = (p == c) ? left_slot(cell) : right_slot(cell);
    return -displacement(sym);
}

long long global_end_index(const Pattern& p) {
    long long total = 0;
    for (const Generation& g : p)
        if (!g.empty()) total += end_index(1, g);
    return total;
}

int PeriodInfo::width() const {
    std::size_t w = 0;
    for (const Generation& g : period) w = std::max(w, g.width());
    return static_cast<int>(w);
}

Pattern PeriodInfo::unfold(int times) const {
    Pattern out;
    out.reserve(period.size() * static_cast<std::size_t>(times));
    for (int i = 0; i < times; ++i)
        for (const Generation& g : period) out.push_back(g.translated(shift * i));
    return out;
}

PeriodInfo PeriodInfo::rotated(int k) const {
    PeriodInfo out = *this;
    const int len = static_cast<int>(period.size());
    if (len == 0) return out;
    k = ((k % len) + len) % len;
    out.period.clear();
    for (int i = k; i < len; ++i) out.period.push_back(period[static_cast<std::size_t>(i)]);
    for (int i = 0; i < k; ++i)
        out.period.push_back(period[static_cast<std::size_t>(i)].translated(shift));
    return out;
}

std::string PeriodInfo::serialize() const {
    std::string out;
    for (std::size_t i = 0; i < period.size(); ++i) {
        if (i) out += ';';
        out += serialize_generation(period[i]);
    }
    return out;
}

Speed speed(const PeriodInfo& periodic) {
    assert(!periodic.period.empty());
    Speed s{global_end_index(periodic.period),
            static_cast<long long>(periodic.period.size())};
    assert(s.displacement == -periodic.shift);
    return s;
}

std::optional<PeriodInfo> find_period(const Generation& init, TurningRule t,
                                      CrossingRule c, long long budget) {
    std::vector<Generation> gens{init};
    std::map<std::string, std::size_t> seen;
    seen.emplace(init.normalized_key(), 0);
    for (long long i = 1; i <= budget; ++i) {
        gens.push_back(step(gens.back(), t, c));
        const auto [it, inserted] = seen.emplace(gens.back().normalized_key(), gens.size() - 1);
        if (inserted) continue;
        const std::size_t first = it->second;
        PeriodInfo info;
        info.preperiod = static_cast<int>(first);
        info.period.assign(gens.begin() + static_cast<std::ptrdiff_t>(first), gens.end() - 1);
        info.shift = gens.back().base() - gens[first].base();
        info.repetitions = 1;
        return info;
    }
    return std::nullopt;
}

Pattern per_of_list(const Pattern& p) {
    const std::size_t n = p.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = p[i] == p[i - d];
        if (ok) return Pattern(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return p;
}

namespace {

// Chain cells may leave the strand span by at most one cell; an all-empty
// generation does not constrain them.
bool chain_admissible(const Generation& g, long long c) {
    if (g.at(c) != CellContent::Empty) return false;
    if (g.empty()) return true;
    const long long last = g.base() + 2 * (static_cast<long long>(g.width()) - 1);
    return c >= g.base() - 2 && c <= last + 2;
}

bool chain_dfs(const std::vector<Generation>& period, std::size_t i, long long c,
               std::set<std::pair<std::size_t, long long>>& dead,
               std::vector<long long>& path) {
    path.push_back(c);
    if (i + 1 == period.size()) return true;
    if (!dead.count({i, c})) {
        for (const long long child : {c - 1, c + 1}) {
            if (chain_admissible(period[i + 1], child) &&
                chain_dfs(period, i + 1, child, dead, path))
                return true;
        }
        dead.insert({i, c});
    }
    path.pop_back();
    return false;
}

}  // namespace

std::optional<NullChain> null_chain_witness(const std::vector<Generation>& period) {
    if (period.empty() || period.front().empty()) return std::nullopt;
    const Generation& first = period.front();
    const auto positions = first.strand_positions();
    const long long last = first.base() + 2 * (static_cast<long long>(first.width()) - 1);
    std::set<std::pair<std::size_t, long long>> dead;
    for (long long c = first.base(); c <= last; c += 2) {
        if (first.at(c) != CellContent::Empty) continue;
        if (positions.front() >= c || positions.back() <= c + 1) continue;
        std::vector<long long> path;
        if (chain_dfs(period, 0, c, dead, path)) return NullChain{std::move(path)};
    }
    return std::nullopt;
}

bool null_chain_exists(const std::vector<Generation>& period) {
    return null_chain_witness(period).has_value();
}

std::string NoRule::str() const {
    if (reason == Reason::Discontinuous)
        return "discontinuous at generation " + std::to_string(generation) + ", cell " +
               std::to_string(cell);
    std::string out = "conflict at bits ";
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(bits[i]);
    }
    return out;
}

InferredRule infer_turning_rule(const Pattern& p) {
    if (const auto v = continuity_check(p)) {
        NoRule f;
        f.reason = NoRule::Reason::Discontinuous;
        f.generation = v->generation;
        f.cell = v->cell;
        return {std::nullopt, std::move(f)};
    }
    bool straight[9] = {};
    bool turned[9] = {};
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        const Generation& parent = p[i];
        const Generation& child = p[i + 1];
        if (parent.empty()) continue;
        const long long last = parent.base() + 2 * (static_cast<long long>(parent.width()) - 1);
        for (long long c = parent.base() - 1; c <= last + 1; c += 2) {
            const Config cfg = effective_config(parent.at(c - 1), parent.at(c + 1));
            if (cfg.bit == config_bit(ParentClass::E, ParentClass::E)) continue;
            const ParentClass cls = raw_class(child.at(c));
            assert(cls != ParentClass::E);
            (cls == ParentClass::S ? straight : turned)[cfg.bit] = true;
        }
    }
    std::vector<int> conflicts;
    for (int b = 0; b < 9; ++b)
        if (straight[b] && turned[b]) conflicts.push_back(b);
    if (!conflicts.empty()) {
        NoRule f;
        f.reason = NoRule::Reason::Conflict;
        f.bits = std::move(conflicts);
        return {std::nullopt, std::move(f)};
    }
    GenericRule rule(GenericRule::Kind::Turning);
    for (int b = 0; b < 9; ++b) {
        if (straight[b]) rule.set(b, Tri::Zero);
        if (turned[b]) rule.set(b, Tri::One);
    }
    return {rule, std::nullopt};
}

InferredRule infer_crossing_rule(const Pattern& p) {
    bool as_z[9] = {};
    bool as_s[9] = {};
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        const Generation& parent = p[i];
        const Generation& child = p[i + 1];
        for (std::size_t k = 0; k < child.width(); ++k) {
            const CellContent cell = child.cells()[k];
            if (!is_crossing(cell)) continue;
            const long long c = child.base() + 2 * static_cast<long long>(k);
            const int bit = config_bit(raw_class(parent.at(c - 3)), raw_class(parent.at(c + 3)));
            (cell == CellContent::CrossingZ ? as_z : as_s)[bit] = true;
        }
    }
    std::vector<int> conflicts;
    for (int b = 0; b < 9; ++b)
        if (as_z[b] && as_s[b]) conflicts.push_back(b);
    if (!conflicts.empty()) {
        NoRule f;
        f.reason = NoRule::Reason::Conflict;
        f.bits = std::move(conflicts);
        return {std::nullopt, std::move(f)};
    }
    GenericRule rule(GenericRule::Kind::Crossing);
    for (int b = 0; b < 9; ++b) {
        if (as_z[b]) rule.set(b, Tri::One);
        if (as_s[b]) rule.set(b, Tri::Zero);
    }
    return {rule, std::nullopt};
}

bool is_pure(const Speed& s, const GenericRule& turning) {
    const Rational v = valuation(s);
    if (v.num == 0) throw std::invalid_argument("purity is undefined at speed 0");
    return turning.at(v.num > 0 ? 1 : 3) != Tri::One;
}

bool is_pure(const GliderReport& r) {
    if (!r.turning) throw std::invalid_argument("purity needs an inferred turning rule");
    return is_pure(r.speed, *r.turning);
}

namespace {

struct StrandSlot {
    long long pos;
    Strand sym;
};

// Strands of one row in position order, each with its slot symbol.
std::vector<StrandSlot> slots_of(const Generation& g) {
    std::vector<StrandSlot> out;
    for (std::size_t k = 0; k < g.width(); ++k) {
        const CellContent cell = g.cells()[k];
        const long long c = g.base() + 2 * static_cast<long long>(k);
        if (left_slot(cell) != Strand::None) out.push_back({c, left_slot(cell)});
        if (right_slot(cell) != Strand::None) out.push_back({c + 1, right_slot(cell)});
    }
    return out;
}

// ids[i][j] is the first-generation rank (1-based) of the strand holding
// rank j in generation i, carried along the displacement law.
std::vector<std::vector<int>> trace_ids(const Pattern& p) {
    std::vector<std::vector<int>> ids(p.size());
    if (p.empty()) return ids;
    const std::size_t n = static_cast<std::size_t>(p.front().strand_count());
    ids[0].resize(n);
    for (std::size_t j = 0; j < n; ++j) ids[0][j] = static_cast<int>(j) + 1;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        const auto cur = slots_of(p[i]);
        std::map<long long, int> id_at;
        for (std::size_t j = 0; j < cur.size(); ++j)
            id_at[cur[j].pos + displacement(cur[j].sym)] = ids[i][j];
        const auto next = p[i + 1].strand_positions();
        assert(next.size() == cur.size());
        ids[i + 1].resize(next.size());
        for (std::size_t j = 0; j < next.size(); ++j) {
            const auto it = id_at.find(next[j]);
            assert(it != id_at.end());
            ids[i + 1][j] = it->second;
        }
    }
    return ids;
}

// Drops every strand whose id is not kept. A crossing keeps its content only
// when both members stay; a lone survivor keeps its own slot and symbol.
Generation keep_strands(const Generation& g, const std::vector<int>& gen_ids,
                        const std::set<int>& keep) {
    std::vector<CellContent> cells;
    cells.reserve(g.width());
    std::size_t rank = 0;
    for (std::size_t k = 0; k < g.width(); ++k) {
        const CellContent cell = g.cells()[k];
        bool keep_left = false;
        bool keep_right = false;
        if (left_slot(cell) != Strand::None) keep_left = keep.count(gen_ids[rank++]) != 0;
        if (right_slot(cell) != Strand::None) keep_right = keep.count(gen_ids[rank++]) != 0;
        CellContent out = CellContent::Empty;
        if (keep_left && keep_right)
            out = cell;
        else if (keep_left)
            out = cell_from_slots(left_slot(cell), Strand::None);
        else if (keep_right)
            out = cell_from_slots(Strand::None, right_slot(cell));
        cells.push_back(out);
    }
    return Generation(g.base(), std::move(cells));
}

int permutation_order(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(perm.size(), false);
    long long ord = 1;
    for (int j = 0; j < n; ++j) {
        if (seen[static_cast<std::size_t>(j)]) continue;
        int len = 0;
        int cur = j;
        while (!seen[static_cast<std::size_t>(cur)]) {
            seen[static_cast<std::size_t>(cur)] = true;
            cur = perm[static_cast<std::size_t>(cur)];
            ++len;
        }
        ord = std::lcm(ord, static_cast<long long>(len));
    }
    return static_cast<int>(ord);
}

std::set<int> kept_ids(int n, int k, bool left) {
    std::set<int> keep;
    for (int j = 0; j < k; ++j) keep.insert(left ? j + 1 : n - j);
    return keep;
}

Pattern finite_subpattern(const Pattern& p, int k, bool left) {
    if (p.empty()) throw std::out_of_range("subpattern of an empty pattern");
    const int n = p.front().strand_count();
    if (k < 1 || k > n) throw std::out_of_range("subpattern strand count out of range");
    const auto ids = trace_ids(p);
    const auto keep = kept_ids(n, k, left);
    Pattern out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = keep_strands(p[i], ids[i], keep);
    return out;
}

PeriodInfo periodic_subpattern(const PeriodInfo& g, int k, bool left) {
    const int n = g.strands();
    if (k < 1 || k > n) throw std::out_of_range("subpattern strand count out of range");
    const long long len = static_cast<long long>(g.period.size());

    Pattern once = g.unfold(1);
    once.push_back(g.period.front().translated(g.shift));
    const auto once_ids = trace_ids(once);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        perm[static_cast<std::size_t>(once_ids.back()[static_cast<std::size_t>(j)] - 1)] = j;
    const int m = permutation_order(perm);

    Pattern run = g.unfold(m);
    run.push_back(g.period.front().translated(g.shift * m));
    const auto ids = trace_ids(run);
    const auto keep = kept_ids(n, k, left);
    const long long total = len * m;
    Pattern sub(static_cast<std::size_t>(total));
    for (long long i = 0; i < total; ++i)
        sub[static_cast<std::size_t>(i)] =
            keep_strands(run[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(i)], keep);

    // Minimal translated period: its length divides the run and forces the
    // per-cycle translation to shift*d/len.
    for (long long d = 1; d <= total; ++d) {
        if (total % d != 0 || (g.shift * d) % len != 0) continue;
        const long long tau = g.shift * d / len;
        bool ok = true;
        for (long long i = 0; i + d < total && ok; ++i)
            ok = sub[static_cast<std::size_t>(i + d)] ==
                 sub[static_cast<std::size_t>(i)].translated(tau);
        if (!ok) continue;
        PeriodInfo out;
        out.period.assign(sub.begin(), sub.begin() + static_cast<std::ptrdiff_t>(d));
        out.shift = tau;
        out.repetitions = static_cast<int>(total / d);
        return out;
    }
    throw std::logic_error("periodic subpattern reduction failed");
}

}  // namespace

PeriodInfo left_subpattern(const PeriodInfo& g, int k) { return periodic_subpattern(g, k, true); }
PeriodInfo right_subpattern(const PeriodInfo& g, int k) { return periodic_subpattern(g, k, false); }
Pattern left_subpattern(const Pattern& p, int k) { return finite_subpattern(p, k, true); }
Pattern right_subpattern(const Pattern& p, int k) { return finite_subpattern(p, k, false); }

NestedResult is_nested_under(const PeriodInfo& glider) {
    const Rational v = valuation(speed(glider));
    if (v.num == 0) throw std::invalid_argument("nestedness is undefined at speed 0");
    const bool left = v.num > 0;
    const int n = glider.strands();
    NestedResult res;
    GenericRule acc(GenericRule::Kind::Turning);
    for (int k = 1; k <= n; ++k) {
        const PeriodInfo sub = left ? left_subpattern(glider, k) : right_subpattern(glider, k);
        if (null_chain_exists(sub.period) || valuation(speed(sub)).num == 0) {
            res.failed_k = k;
            return res;
        }
        const InferredRule inf = infer_turning_rule(sub.unfold(2));
        if (!inf.ok()) {
            res.failed_k = k;
            return res;
        }
        const auto met = meet(acc, *inf.rule);
        if (!met) {
            res.contradiction = true;
            return res;
        }
        acc = *met;
    }
    res.rule = acc;
    return res;
}

GliderReport is_glider(const PeriodInfo& periodic) {
    GliderReport r;
    r.period = periodic;
    r.width = periodic.width();
    r.speed = speed(periodic);
    r.null_chain = null_chain_witness(periodic.period);
    r.is_repeating = !r.null_chain.has_value();
    r.is_glider = r.is_repeating && valuation(r.speed).num != 0;
    const Pattern doubled = periodic.unfold(2);
    if (const auto t = infer_turning_rule(doubled); t.ok()) r.turning = t.rule;
    if (const auto c = infer_crossing_rule(doubled); c.ok()) r.crossing = c.rule;
    if (r.is_glider && r.turning) r.pure = is_pure(r.speed, *r.turning);
    if (r.is_glider) {
        const NestedResult nested = is_nested_under(periodic);
        r.nested_rule = nested.rule;
    }
    return r;
}

std::optional<GliderReport> is_glider(const Generation& init, TurningRule t,
                                      CrossingRule c, long long budget) {
    const auto info = find_period(init, t, c, budget);
    if (!info) return std::nullopt;
    return is_glider(*info);
}

std::vector<Pattern> cyclic_permutations(const std::vector<Generation>& period) {
    const long long shift = -global_end_index(period);
    const std::size_t len = period.size();
    std::vector<Pattern> out;
    out.reserve(len);
    for (std::size_t k = 0; k < len; ++k) {
        Pattern rot;
        rot.reserve(len);
        for (std::size_t i = k; i < len; ++i) rot.push_back(period[i]);
        for (std::size_t i = 0; i < k; ++i) rot.push_back(period[i].translated(shift));
        out.push_back(std::move(rot));
    }
    return out;
}

std::vector<Pattern> shift_set(const std::vector<Generation>& period) {
    std::vector<Pattern> out;
    for (auto& rot : cyclic_permutations(period))
        if (std::find(out.begin(), out.end(), rot) == out.end()) out.push_back(std::move(rot));
    return out;
}

Pattern slice(const Pattern& p, std::size_t i, std::size_t j) {
    if (i < 1 || i > j || j > p.size()) throw std::out_of_range("slice bounds");
    return Pattern(p.begin() + static_cast<std::ptrdiff_t>(i - 1),
                   p.begin() + static_cast<std::ptrdiff_t>(j));
}

GliderDescription GliderDescription::make(const PeriodInfo& info, const GenericRule& turning) {
    GliderDescription d;
    const long long delta = info.period.empty() ? 0 : -info.period.front().base();
    d.period.reserve(info.period.size());
    for (const Generation& g : info.period) d.period.push_back(g.translated(delta));
    d.turning = turning;
    d.width = info.width();
    return d;
}

Speed GliderDescription::speed() const {
    return {global_end_index(period), static_cast<long long>(period.size())};
}

std::string GliderDescription::line() const {
    std::string out = "period=";
    for (std::size_t i = 0; i < period.size(); ++i) {
        if (i) out += ';';
        out += serialize_generation(period[i]);
    }
    out += " ; turn=" + turning.str();
    out += " ; width=" + std::to_string(width);
    out += " ; speed=" + speed().str();
    return out;
}

bool operator<(const GliderDescription& a, const GliderDescription& b) {
    return a.line() < b.line();
}

int pattern_width(const Pattern& p) {
    std::size_t w = 0;
    for (const Generation& g : p) w = std::max(w, g.width());
    return static_cast<int>(w);
}

}  // namespace sca
