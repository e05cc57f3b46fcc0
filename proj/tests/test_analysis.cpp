#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "sca/analysis.hpp"
#include "sca/step.hpp"
#include "sca/text.hpp"

using namespace sca;

namespace {

Generation gen(const std::string& line) {
    const auto r = parse_pattern(line);
    REQUIRE(!r.error.has_value());
    REQUIRE(r.pattern.size() == 1);
    return r.pattern.front();
}

Pattern pat(const std::string& text) {
    const auto r = parse_pattern(text);
    REQUIRE(!r.error.has_value());
    return r.pattern;
}

TurningRule turn(const std::string& s) {
    const auto r = parse_turning(s);
    REQUIRE(r.has_value());
    return *r;
}

CrossingRule cross(const std::string& s) {
    const auto r = parse_crossing(s);
    REQUIRE(r.has_value());
    return *r;
}

GenericRule generic(GenericRule::Kind k, const std::string& s) {
    const auto r = GenericRule::parse(k, s);
    REQUIRE(r.has_value());
    return *r;
}

PeriodInfo found(const std::string& init, const std::string& t, const std::string& c,
                 long long budget = 256) {
    const auto info = find_period(gen(init), turn(t), cross(c), budget);
    REQUIRE(info.has_value());
    return *info;
}

int count_rows_with(const std::vector<Generation>& gens, Strand sym) {
    int n = 0;
    for (const auto& g : gens) {
        bool has = false;
        for (const auto c : g.cells()) has = has || left_slot(c) == sym || right_slot(c) == sym;
        n += has ? 1 : 0;
    }
    return n;
}

}  // namespace

TEST_CASE("speed symbols stay unreduced, valuation collapses them") {
    const Speed a{2, 6};
    const Speed b{1, 3};
    CHECK(a != b);
    CHECK(valuation(a) == valuation(b));
    CHECK(valuation(a) == Rational(1, 3));
    CHECK(a.str() == "2/6");
    CHECK(valuation(Speed{0, 2}) == Rational(0, 1));
    CHECK(valuation(Speed{-2, 6}) == Rational(-1, 3));
    CHECK(Rational(-1, 3) < Rational(0, 1));
    CHECK(Rational(1, 5) < Rational(1, 3));
    CHECK(Rational(2, 6).str() == "1/3");
    CHECK(Rational(3, 1).str() == "3");
    CHECK(Rational(1, -3) == Rational(-1, 3));
}

TEST_CASE("end indices follow the displacement law") {
    CHECK(end_index(1, gen("@0 -l")) == 1);
    CHECK(end_index(1, gen("@0 r-")) == -1);
    CHECK(end_index(1, gen("@0 s- -s")) == 0);
    CHECK(end_index(2, gen("@0 s- -s")) == 0);
    CHECK(end_index(1, gen("@0 rl")) == 0);
    CHECK(end_index(2, gen("@0 rl")) == 0);
    CHECK(end_index(1, gen("@0 RL")) == 0);
    CHECK(end_index(2, gen("@1 -l -l")) == 1);
    CHECK_THROWS_AS(end_index(3, gen("@0 rl")), std::out_of_range);
    CHECK(global_end_index(pat("@0 -l\n@-1 -l")) == 2);
}

TEST_CASE("find_period: crossing/uncross alternation has period 2 and speed 0") {
    const auto info = found("@0 -s s-", "100000000", "000010000");
    CHECK(info.preperiod == 0);
    CHECK(info.period.size() == 2);
    CHECK(info.shift == 0);
    CHECK(info.period[0] == gen("@0 -s s-"));
    CHECK(info.period[1] == gen("@1 rl"));
    CHECK(speed(info) == Speed{0, 2});
    CHECK(valuation(speed(info)) == Rational(0, 1));
}

TEST_CASE("find_period: single strand under b1=1,b3=1,b5=0,b7=0 cycles s,l,s,r") {
    const auto info = found("@0 s-", "010100000", "000000000");
    CHECK(info.preperiod == 0);
    CHECK(info.period.size() == 4);
    CHECK(info.shift == 0);
    CHECK(info.period[1] == gen("@-1 -l"));
    CHECK(info.period[3] == gen("@-1 r-"));
    CHECK(speed(info) == Speed{0, 4});
}

TEST_CASE("find_period respects the budget and reports divergence as absence") {
    CHECK_FALSE(find_period(gen("@0 -l r-"), turn("000001010"), cross("000000000"), 200));
    CHECK(find_period(gen("@0 -l"), turn("000001000"), cross("000000000"), 1));
}

TEST_CASE("find_period on an all-empty row") {
    const auto info = find_period(Generation(), turn("000000000"), cross("000000000"), 4);
    REQUIRE(info.has_value());
    CHECK(info->period.size() == 1);
    CHECK(info->period[0].empty());
    CHECK(info->shift == 0);
}

TEST_CASE("per_of_list finds the shortest verbatim prefix power") {
    const Generation a = gen("@0 s-");
    const Generation b = gen("@0 -s");
    CHECK(per_of_list({a, b, a, b}) == Pattern{a, b});
    CHECK(per_of_list({a, a, a}) == Pattern{a});
    CHECK(per_of_list({a, b, a}) == Pattern{a, b, a});
    // translated copies are not verbatim equal
    CHECK(per_of_list({a, a.translated(2)}) == Pattern{a, a.translated(2)});
}

TEST_CASE("PeriodInfo unfold and rotation") {
    PeriodInfo info;
    info.period = {gen("@0 -l")};
    info.shift = -1;
    const Pattern two = info.unfold(2);
    REQUIRE(two.size() == 2);
    CHECK(two[1] == gen("@-1 -l"));

    const auto g1 = found("@0 -s s-", "100000000", "000010000");
    const auto rot = g1.rotated(1);
    CHECK(rot.period[0] == gen("@1 rl"));
    CHECK(rot.period[1] == gen("@0 -s s-"));
    CHECK(rot.rotated(1).period[0] == gen("@0 -s s-"));
    CHECK(g1.rotated(2) == g1);
    CHECK(g1.serialize() == "@0 -s s-;@1 rl");
}

TEST_CASE("turning inference: the worked crossing pattern gives XX1X00X0X") {
    const auto inf = infer_turning_rule(pat("@0 -s -l\n@1 rl\n@0 -s s-"));
    REQUIRE(inf.ok());
    CHECK(inf.rule->str() == "XX1X00X0X");
    CHECK(inf.rule->matches(turn("001000000")));
}

TEST_CASE("turning inference: conflicting straight and turn observations name bits 3 and 6") {
    const std::string d1 =
        "@0 -s s- -- -- -- -s -l -- -- -- r- -l -- -- -- s- -- -- -- -- r- s- -- -- -- -s r-";
    const std::string d2 =
        "@1 rl -- -- -- -- rl -- -- -- -- ss -- -- -- -l -- -- -- -- -- rl -- -- -- -- r- s-";
    const std::string d3 =
        "@0 -s s- -- -- -- -s s- -- -- -- -s r- -- -- -s -- -- -- -- -- -s s- -- -- -- -- ss";
    const auto inf = infer_turning_rule(pat(d1 + "\n" + d2 + "\n" + d3));
    REQUIRE_FALSE(inf.ok());
    REQUIRE(inf.failure.has_value());
    CHECK(inf.failure->reason == NoRule::Reason::Conflict);
    CHECK(inf.failure->bits == std::vector<int>{3, 6});
    CHECK(inf.failure->str() == "conflict at bits 3,6");
}

TEST_CASE("turning inference: a sliding left turn gives XXXX01XXX") {
    const auto inf = infer_turning_rule(pat("@0 -l\n@-1 -l"));
    REQUIRE(inf.ok());
    CHECK(inf.rule->str() == "XXXX01XXX");
}

TEST_CASE("turning inference: a single generation leaves every exercised bit open") {
    const auto inf = infer_turning_rule(pat("@0 s- rl -s"));
    REQUIRE(inf.ok());
    CHECK(inf.rule->str() == "XXXX0XXXX");
    CHECK(inf.rule->trivial() == false);  // bit 4 is pinned to 0
}

TEST_CASE("turning inference: broken strand flow reports the first offending site") {
    const auto inf = infer_turning_rule(pat("@0 -l r-\n@1 rl"));
    REQUIRE_FALSE(inf.ok());
    REQUIRE(inf.failure.has_value());
    CHECK(inf.failure->reason == NoRule::Reason::Discontinuous);
    CHECK(inf.failure->generation == 2);
    CHECK(inf.failure->cell == -1);
    CHECK(inf.failure->str() == "discontinuous at generation 2, cell -1");
}

TEST_CASE("crossing inference: orientation pins the conditioning bit") {
    const auto z = found("@0 -s s-", "100000000", "000010000");
    const auto zi = infer_crossing_rule(z.unfold(2));
    REQUIRE(zi.ok());
    CHECK(zi.rule->str() == "XXXX1XXXX");

    const auto s = found("@0 -s s-", "100000000", "000000000");
    const auto si = infer_crossing_rule(s.unfold(2));
    REQUIRE(si.ok());
    CHECK(si.rule->str() == "XXXX0XXXX");

    const auto free = infer_crossing_rule(pat("@0 -l\n@-1 -l"));
    REQUIRE(free.ok());
    CHECK(free.rule->trivial());

    const auto clash = infer_crossing_rule(pat("@0 -s s-\n@1 rl\n@0 -s s-\n@1 RL"));
    REQUIRE_FALSE(clash.ok());
    CHECK(clash.failure->reason == NoRule::Reason::Conflict);
    CHECK(clash.failure->bits == std::vector<int>{4});
}

TEST_CASE("null chains: a gap in a sliding row carries one, dense rows do not") {
    const Generation gap = gen("@0 -l -l -- -l");
    const auto w = null_chain_witness({gap});
    REQUIRE(w.has_value());
    CHECK(w->cells == std::vector<long long>{4});
    CHECK(null_chain_exists({gap}));

    const auto g1 = found("@0 -s s-", "100000000", "000010000");
    CHECK_FALSE(null_chain_exists(g1.period));

    CHECK_FALSE(null_chain_exists({gen("@0 -l -l")}));
    CHECK_FALSE(null_chain_exists({gen("@0 rl")}));
}

TEST_CASE("null chains must stay empty along every step of the cycle") {
    // converging pair: the gap fills after one generation, so no 2-long
    // chain fits
    const Pattern closing = {gen("@0 r- -- -l"), gen("@1 s- -s")};
    CHECK(null_chain_exists({closing[0]}));
    CHECK_FALSE(null_chain_exists(closing));

    // diverging pair: both children of the gap cell stay empty
    const Pattern apart = {gen("@0 -l -- r-"), gen("@-1 -s -- -- s-")};
    CHECK(null_chain_exists(apart));

    // cells past a row's stored span count as empty, so a chain may slip
    // around a short row (the rows need not be a real evolution)
    const Pattern slip = {gen("@0 -l -- r-"), gen("@1 ss")};
    CHECK(null_chain_exists(slip));
}

TEST_CASE("glider verdicts: the five-row crossing cycle drifts left at 1/5") {
    const auto report = is_glider(gen("@0 rl"), turn("001100100"), cross("000010000"), 64);
    REQUIRE(report.has_value());
    CHECK(report->is_repeating);
    CHECK(report->is_glider);
    CHECK(report->speed == Speed{1, 5});
    CHECK(valuation(report->speed) == Rational(1, 5));
    CHECK(report->width == 2);
    REQUIRE(report->turning.has_value());
    CHECK(report->turning->str() == "001100X0X");
    REQUIRE(report->crossing.has_value());
    CHECK(report->crossing->str() == "XXXX1XXXX");
    CHECK(report->pure);
    // the lone kept strand answers (E,S) both ways across the seam, so no
    // single-strand rule underlies the cycle
    CHECK_FALSE(report->nested_rule.has_value());
}

TEST_CASE("glider verdicts: the mirrored crossing cycle drifts right at -1/5") {
    const auto report = is_glider(gen("@0 rl"), turn("011000100"), cross("000010000"), 64);
    REQUIRE(report.has_value());
    CHECK(report->is_glider);
    CHECK(report->speed == Speed{-1, 5});
    REQUIRE(report->turning.has_value());
    CHECK(report->turning->str() == "01X00010X");
    CHECK(report->pure);
}

TEST_CASE("glider verdicts: the alternating crossing repeats but does not glide") {
    const auto report = is_glider(gen("@0 -s s-"), turn("100000000"), cross("000010000"), 64);
    REQUIRE(report.has_value());
    CHECK(report->is_repeating);
    CHECK_FALSE(report->is_glider);
    CHECK(valuation(report->speed) == Rational(0, 1));
}

TEST_CASE("glider verdicts: a null chain disqualifies a sliding row") {
    PeriodInfo info;
    info.period = {gen("@0 -l -l -- -l")};
    info.shift = -1;
    const auto report = is_glider(info);
    CHECK_FALSE(report.is_repeating);
    CHECK_FALSE(report.is_glider);
    CHECK(report.null_chain.has_value());
}

TEST_CASE("purity reads one generic bit per sign and rejects speed zero") {
    CHECK(is_pure(Speed{1, 5}, generic(GenericRule::Kind::Turning, "00110010X")));
    CHECK(is_pure(Speed{-1, 5}, generic(GenericRule::Kind::Turning, "01100010X")));
    CHECK(is_pure(Speed{1, 1}, generic(GenericRule::Kind::Turning, "XXXX01XX1")));
    CHECK_FALSE(is_pure(Speed{1, 2}, generic(GenericRule::Kind::Turning, "01XX0XXXX")));
    CHECK_FALSE(is_pure(Speed{-1, 2}, generic(GenericRule::Kind::Turning, "XXX10XXXX")));
    CHECK_THROWS_AS(is_pure(Speed{0, 2}, generic(GenericRule::Kind::Turning, "XXXX0XXXX")),
                    std::invalid_argument);
}

TEST_CASE("two straight strands in step run the one-strand dance side by side") {
    const auto info = found("@0 -s -s", "001100000", "000000000");
    CHECK(info.preperiod == 0);
    CHECK(info.period.size() == 3);
    CHECK(speed(info) == Speed{1, 3});
    CHECK(info.shift == -1);

    const auto one = left_subpattern(info, 1);
    CHECK(one.period.size() == 3);
    CHECK(speed(one) == Speed{1, 3});
    CHECK(one.strands() == 1);
    CHECK(count_rows_with(one.period, Strand::TurnLeft) == 1);
    CHECK(count_rows_with(one.period, Strand::TurnRight) == 0);

    const auto whole = left_subpattern(info, 2);
    CHECK(whole.period == info.period);
    CHECK(whole.shift == info.shift);

    const auto nested = is_nested_under(info);
    REQUIRE(nested.ok());
    CHECK(nested.rule->str() == "X0X100XXX");
}

TEST_CASE("strands sharing a configuration must agree on the verdict") {
    // third row: the left strand turns out of (E,S) while the right strand
    // holds straight in the same configuration, so no rule fits
    const Pattern p = {gen("@0 -s -s"), gen("@1 s- s-"), gen("@0 -l -s")};
    CHECK_FALSE(continuity_check(p).has_value());
    const auto r = infer_turning_rule(p);
    REQUIRE_FALSE(r.ok());
    CHECK(r.failure->reason == NoRule::Reason::Conflict);
    CHECK(r.failure->bits == std::vector<int>{3});
}

TEST_CASE("subpattern tracing crosses the seam as often as the strand order demands") {
    // one traversal of the alternating crossing swaps the two strands
    const auto g1 = found("@0 -s s-", "100000000", "000010000");
    const auto one = left_subpattern(g1, 1);
    CHECK(one.period.size() == 4);
    CHECK(speed(one) == Speed{0, 4});
    CHECK(count_rows_with(one.period, Strand::TurnLeft) == 1);
    CHECK(count_rows_with(one.period, Strand::TurnRight) == 1);
    const auto right = right_subpattern(g1, 1);
    CHECK(right.period.size() == 4);
}

TEST_CASE("subpattern extraction re-forms double-straight and crossing cells") {
    const auto info = found("@0 -s s-", "100000000", "000010000");
    const Pattern run = info.unfold(2);
    const Pattern kept = left_subpattern(run, 1);
    REQUIRE(kept.size() == 4);
    CHECK(kept[0] == gen("@0 -s"));
    CHECK(kept[1] == gen("@1 r-"));
    CHECK(kept[2] == gen("@2 s-"));
    CHECK(kept[3] == gen("@1 -l"));
    CHECK(right_subpattern(run, 2) == run);
    CHECK_THROWS_AS(left_subpattern(run, 3), std::out_of_range);
    CHECK_THROWS_AS(left_subpattern(run, 0), std::out_of_range);
}

TEST_CASE("speed-1 gliders of up to four strands are nested above XXXX01XX1") {
    const GenericRule floor = generic(GenericRule::Kind::Turning, "XXXX01XX1");
    for (int n = 1; n <= 4; ++n) {
        std::string init = "@0";
        for (int i = 0; i < n; ++i) init += " -l";
        const auto info = found(init, "000001001", "000000000", 16);
        CHECK(info.period.size() == 1);
        CHECK(speed(info) == Speed{1, 1});
        const auto nested = is_nested_under(info);
        REQUIRE(nested.ok());
        CHECK(nested.rule->contains(floor));
    }
}

TEST_CASE("nestedness fails when a subpattern stalls") {
    // two strands drifting together: strand 1 alone has speed 0
    const auto info = found("@0 s-", "010100000", "000000000");
    CHECK(valuation(speed(info)) == Rational(0, 1));
    CHECK_THROWS_AS(is_nested_under(info), std::invalid_argument);
}

TEST_CASE("shift sets are the rotations of the cycle") {
    const auto g3 = pat("@1 ss -l\n@0 -l RL\n@-1 -s -s s-\n@0 r- rl");
    CHECK(global_end_index(g3) == 0);
    const auto rots = cyclic_permutations(g3);
    REQUIRE(rots.size() == 4);
    CHECK(rots[0] == g3);
    CHECK(rots[1][0] == g3[1]);
    CHECK(rots[1][3] == g3[0]);
    const auto set = shift_set(g3);
    CHECK(set.size() == 4);
    // each rotation contains the original in its own shift set
    for (const auto& r : rots) {
        const auto back = shift_set(r);
        CHECK(std::find(back.begin(), back.end(), g3) != back.end());
    }

    const Pattern lone = {gen("@0 -l")};
    const auto lone_set = shift_set(lone);
    REQUIRE(lone_set.size() == 1);
    CHECK(lone_set[0] == lone);

    const auto drift = found("@0 -l", "000001000", "000000000");
    const auto two = drift.unfold(2);
    CHECK(cyclic_permutations(two).size() == 2);
    // the rotations are translates of one another, not verbatim duplicates
    CHECK(shift_set(two).size() == 2);

    // a stationary word repeated twice does rotate onto itself verbatim
    const auto still = found("@0 s-", "000000000", "000000000");
    const auto four = still.unfold(2);
    REQUIRE(four.size() == 4);
    CHECK(cyclic_permutations(four).size() == 4);
    CHECK(shift_set(four).size() == 2);
}

TEST_CASE("slices are verbatim sub-lists") {
    const Pattern p = generate(gen("@0 rl"), turn("001100100"), cross("000010000"), 6);
    CHECK(slice(p, 1, p.size()) == p);
    CHECK(slice(p, 2, 4).size() == 3);
    CHECK(slice(p, 2, 4)[0] == p[1]);
    CHECK_FALSE(continuity_check(slice(p, 3, 6)).has_value());
    CHECK_THROWS_AS(slice(p, 0, 2), std::out_of_range);
    CHECK_THROWS_AS(slice(p, 3, 2), std::out_of_range);
    CHECK_THROWS_AS(slice(p, 1, p.size() + 1), std::out_of_range);
}

TEST_CASE("descriptions anchor at base 0 and print one canonical line") {
    const auto info = found("@0 -l", "000001000", "000000000");
    PeriodInfo moved = info;
    moved.period[0] = moved.period[0].translated(-6);
    const auto d = GliderDescription::make(moved, generic(GenericRule::Kind::Turning, "XXXX01XXX"));
    CHECK(d.period[0] == gen("@0 -l"));
    CHECK(d.width == 1);
    CHECK(d.speed() == Speed{1, 1});
    CHECK(d.line() == "period=@0 -l ; turn=XXXX01XXX ; width=1 ; speed=1/1");

    const auto same = GliderDescription::make(info, generic(GenericRule::Kind::Turning, "XXXX01XXX"));
    CHECK(same == d);
}
