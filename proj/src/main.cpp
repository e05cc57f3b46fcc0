#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sca/analysis.hpp"
#include "sca/enumerate.hpp"
#include "sca/render.hpp"
#include "sca/step.hpp"
#include "sca/text.hpp"

namespace {

using nlohmann::json;

// Analysis verdicts (NoRule, no period in budget, classification mismatch)
// exit 1; bad flags, unreadable files, and malformed input exit 2.
constexpr int kVerdict = 1;
constexpr int kUsage = 2;

struct Options {
    bool json = false;
    bool reversed_rules = false;
};

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return kUsage;
}

// A value starting with '@' is inline pattern text; anything else names a
// file, with "-" for stdin.
std::optional<std::string> load_text(const std::string& arg, std::string& err) {
    if (!arg.empty() && arg.front() == '@') return arg;
    std::ostringstream buf;
    if (arg == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(arg);
    if (!in) {
        err = "cannot open " + arg;
        return std::nullopt;
    }
    buf << in.rdbuf();
    return buf.str();
}

std::optional<sca::Pattern> load_pattern(const std::string& arg, std::string& err) {
    const auto text = load_text(arg, err);
    if (!text) return std::nullopt;
    auto parsed = sca::parse_pattern(*text);
    if (!parsed.ok()) {
        err = arg + ": " + parsed.error->str();
        return std::nullopt;
    }
    if (parsed.pattern.empty()) {
        err = arg + ": no generations";
        return std::nullopt;
    }
    return std::move(parsed.pattern);
}

std::string rule_arg(std::string s, const Options& opt) {
    if (opt.reversed_rules) std::reverse(s.begin(), s.end());
    return s;
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) return usage_error("cannot write " + out_path);
    out << text;
    return 0;
}

int cmd_simulate(const Options& opt, const std::string& init, const std::string& turn,
                 const std::string& cross, long long steps, const std::string& mode,
                 const std::string& out_path) {
    std::string err;
    const auto seed = load_pattern(init, err);
    if (!seed) return usage_error(err);
    const auto t = sca::parse_turning(rule_arg(turn, opt));
    if (!t) return usage_error("--turn wants 9 bits of 0/1 with the middle bit 0: empty parents never hand down a strand");
    const auto c = sca::parse_crossing(rule_arg(cross, opt));
    if (!c) return usage_error("--cross wants 9 bits of 0/1");

    const sca::Pattern run =
        sca::generate(seed->front(), *t, *c, static_cast<std::size_t>(steps) + 1);
    std::string text;
    if (mode == "ascii")
        text = sca::render_ascii(run);
    else if (mode == "svg")
        text = sca::render_svg(run);
    else
        text = sca::serialize_pattern(run);

    if (opt.json) {
        json j;
        j["generations"] = run.size();
        j["width"] = sca::pattern_width(run);
        if (!out_path.empty()) {
            if (const int rc = emit(text, out_path)) return rc;
        }
        std::cout << j.dump() << "\n";
        return 0;
    }
    return emit(text, out_path);
}

int cmd_infer(const Options& opt, const std::string& pattern_arg) {
    std::string err;
    const auto p = load_pattern(pattern_arg, err);
    if (!p) return usage_error(err);

    const auto turning = sca::infer_turning_rule(*p);
    if (!turning.ok()) {
        if (opt.json) {
            json j;
            j["error"] = turning.failure->str();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "no rule: " << turning.failure->str() << "\n";
        }
        return kVerdict;
    }
    const auto crossing = sca::infer_crossing_rule(*p);
    if (opt.json) {
        json j;
        j["turning"] = turning.rule->str();
        j["crossing"] = crossing.rule->str();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "turning: " << turning.rule->str() << "\n";
        std::cout << "crossing: " << crossing.rule->str() << "\n";
    }
    return 0;
}

int cmd_analyze(const Options& opt, const std::string& init, const std::string& turn,
                const std::string& cross, long long budget) {
    std::string err;
    const auto seed = load_pattern(init, err);
    if (!seed) return usage_error(err);
    const auto t = sca::parse_turning(rule_arg(turn, opt));
    if (!t) return usage_error("--turn wants 9 bits of 0/1 with the middle bit 0: empty parents never hand down a strand");
    const auto c = sca::parse_crossing(rule_arg(cross, opt));
    if (!c) return usage_error("--cross wants 9 bits of 0/1");

    const auto report = sca::is_glider(seed->front(), *t, *c, budget);
    if (!report) {
        if (opt.json) {
            json j;
            j["error"] = "no period within budget";
            j["budget"] = budget;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "no period within budget " << budget << "\n";
        }
        return kVerdict;
    }

    const auto& r = *report;
    const std::string speed_sym = r.speed.str();
    const std::string speed_val = sca::valuation(r.speed).str();
    if (opt.json) {
        json j;
        j["preperiod"] = r.period.preperiod;
        j["period"] = json::array();
        for (const auto& g : r.period.period) j["period"].push_back(sca::serialize_generation(g));
        j["shift"] = r.period.shift;
        j["speed"] = speed_sym;
        j["speed_value"] = speed_val;
        j["width"] = r.width;
        j["repeating"] = r.is_repeating;
        j["glider"] = r.is_glider;
        j["pure"] = r.pure;
        if (r.turning) j["turning"] = r.turning->str();
        if (r.crossing) j["crossing"] = r.crossing->str();
        j["nested"] = r.nested_rule ? json(r.nested_rule->str()) : json(nullptr);
        if (r.null_chain) j["null_chain"] = r.null_chain->cells;
        std::cout << j.dump() << "\n";
        return 0;
    }

    std::cout << "preperiod " << r.period.preperiod << ", period " << r.period.length()
              << ", shift " << r.period.shift << "\n";
    for (const auto& g : r.period.period)
        std::cout << "  " << sca::serialize_generation(g) << "\n";
    std::cout << "speed " << speed_sym << " (value " << speed_val << ")\n";
    std::cout << "repeating: " << (r.is_repeating ? "yes" : "no")
              << "  glider: " << (r.is_glider ? "yes" : "no")
              << "  pure: " << (r.pure ? "yes" : "no") << "\n";
    if (r.turning) std::cout << "turning: " << r.turning->str() << "\n";
    if (r.crossing) std::cout << "crossing: " << r.crossing->str() << "\n";
    if (r.nested_rule)
        std::cout << "nested under: " << r.nested_rule->str() << "\n";
    else
        std::cout << "nested under: none\n";
    if (r.null_chain) {
        std::cout << "null chain cells:";
        for (const long long c2 : r.null_chain->cells) std::cout << " " << c2;
        std::cout << "\n";
    }
    return 0;
}

int cmd_classify(const Options& opt, int strands) {
    const auto result = sca::classify_small(strands);
    const std::size_t total = result.matched + result.missing.size();
    if (opt.json) {
        json j;
        j["strands"] = strands;
        j["matched"] = result.matched;
        j["total"] = total;
        j["missing"] = result.missing;
        j["unexpected"] = result.unexpected;
        std::cout << j.dump() << "\n";
        return result.ok() ? 0 : kVerdict;
    }
    for (const auto& cls : result.classes) std::cout << cls.line() << "\n";
    for (const auto& line : result.missing) std::cout << "missing: " << line << "\n";
    for (const auto& line : result.unexpected) std::cout << "unexpected: " << line << "\n";
    std::cout << result.matched << "/" << total << " classes matched\n";
    return result.ok() ? 0 : kVerdict;
}

int cmd_enumerate(const Options& opt, int strands, long long multiplier, int jobs) {
    const auto start = std::chrono::steady_clock::now();
    sca::ExtendStats total;
    sca::VSet v = sca::enumerate_pure(1, jobs, multiplier);
    for (int n = 2; n <= strands; ++n) {
        sca::ExtendStats step;
        v = sca::extend_pure(v, jobs, multiplier, &step);
        total.tuples += step.tuples;
        total.rejected_crossing += step.rejected_crossing;
        total.rejected_divergence += step.rejected_divergence;
        total.rejected_budget += step.rejected_budget;
        total.rejected_split += step.rejected_split;
    }
    std::sort(v.begin(), v.end());
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (!opt.json)
        for (const auto& d : v) std::cout << d.line() << "\n";
    if (opt.json) {
        json j;
        j["n"] = strands;
        j["count"] = v.size();
        j["rejected"] = {{"crossing", total.rejected_crossing},
                         {"divergence", total.rejected_divergence},
                         {"budget", total.rejected_budget}};
        j["wall_time"] = wall;
        std::cout << j.dump() << "\n";
    }
    return 0;
}

int cmd_oracle(const Options& opt, int strands, int max_width, long long budget) {
    sca::OracleConfig cfg;
    cfg.strands = strands;
    cfg.max_width = max_width > 0 ? max_width : strands + 1;
    cfg.budget = budget;
    sca::OracleStats stats;
    const auto classes = sca::oracle_enumerate(cfg, &stats);
    if (opt.json) {
        json j;
        j["strands"] = cfg.strands;
        j["max_width"] = cfg.max_width;
        j["budget"] = cfg.budget;
        j["count"] = classes.size();
        j["runs"] = stats.runs;
        j["no_period"] = stats.no_period;
        j["null_chains"] = stats.null_chains;
        std::cout << j.dump() << "\n";
        return 0;
    }
    for (const auto& cls : classes) std::cout << cls.line() << "\n";
    std::cout << "classes: " << classes.size() << " (runs " << stats.runs << ", no period "
              << stats.no_period << ", null chains " << stats.null_chains << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stranded cellular automata: simulate, infer, analyze, classify, enumerate"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "print a JSON summary on stdout instead of the plain report");
    std::string rule_order = "canonical";
    app.add_option("--rule-order", rule_order,
                   "bit order of rule strings on the command line: canonical (bit 0 leftmost) "
                   "or reversed")
        ->check(CLI::IsMember({"canonical", "reversed"}));
    // global flags may also appear after the subcommand name
    app.fallthrough();

    auto* sim = app.add_subcommand("simulate", "evolve an initial generation");
    std::string sim_init, sim_turn, sim_cross, sim_mode, sim_out;
    long long sim_steps = 0;
    sim->add_option("--init", sim_init, "pattern file, - for stdin, or inline text starting with @")
        ->required();
    sim->add_option("--turn", sim_turn, "concrete turning rule, 9 bits")->required();
    sim->add_option("--cross", sim_cross, "concrete crossing rule, 9 bits")->required();
    sim->add_option("--steps", sim_steps, "number of evolution steps")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sim->add_option("--render", sim_mode, "ascii or svg instead of the text format")
        ->check(CLI::IsMember({"ascii", "svg"}));
    sim->add_option("--out", sim_out, "write the output to a file");

    auto* inf = app.add_subcommand("infer", "infer generic rules from a pattern");
    std::string inf_pattern;
    inf->add_option("--pattern", inf_pattern, "pattern file, - for stdin, or inline text")
        ->required();

    auto* ana = app.add_subcommand("analyze", "find the period and the glider verdicts");
    std::string ana_init, ana_turn, ana_cross;
    long long ana_budget = 4096;
    ana->add_option("--init", ana_init, "pattern file, - for stdin, or inline text")->required();
    ana->add_option("--turn", ana_turn, "concrete turning rule, 9 bits")->required();
    ana->add_option("--cross", ana_cross, "concrete crossing rule, 9 bits")->required();
    ana->add_option("--budget", ana_budget, "maximum steps before giving up")
        ->check(CLI::PositiveNumber);

    auto* cls = app.add_subcommand("classify", "compare search results against the built-in table");
    int cls_strands = 1;
    cls->add_option("--strands", cls_strands, "1 or 2")->required()->check(CLI::Range(1, 2));

    auto* enu = app.add_subcommand("enumerate-pure", "list pure glider descriptions");
    int enu_strands = 1, enu_jobs = 1;
    long long enu_mult = 1;
    enu->add_option("--strands", enu_strands, "number of strands")
        ->required()
        ->check(CLI::PositiveNumber);
    enu->add_option("--budget-multiplier", enu_mult, "scale the per-tuple step budget")
        ->check(CLI::PositiveNumber);
    enu->add_option("--jobs", enu_jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* ora = app.add_subcommand("oracle", "exhaustive bounded search for repeating patterns");
    int ora_strands = 1, ora_width = 0;
    long long ora_budget = 256;
    ora->add_option("--strands", ora_strands, "number of strands")
        ->required()
        ->check(CLI::PositiveNumber);
    ora->add_option("--max-width", ora_width, "initial row width bound in cells, default strands+1")
        ->check(CLI::PositiveNumber);
    ora->add_option("--budget", ora_budget, "steps before a run counts as aperiodic")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }
    opt.reversed_rules = rule_order == "reversed";

    try {
        if (sim->parsed())
            return cmd_simulate(opt, sim_init, sim_turn, sim_cross, sim_steps, sim_mode, sim_out);
        if (inf->parsed()) return cmd_infer(opt, inf_pattern);
        if (ana->parsed()) return cmd_analyze(opt, ana_init, ana_turn, ana_cross, ana_budget);
        if (cls->parsed()) return cmd_classify(opt, cls_strands);
        if (enu->parsed()) return cmd_enumerate(opt, enu_strands, enu_mult, enu_jobs);
        if (ora->parsed()) return cmd_oracle(opt, ora_strands, ora_width, ora_budget);
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    return kUsage;
}
