#include "root_enclose/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "root_enclose/analysis.hpp"
#include "root_enclose/bench.hpp"
#include "root_enclose/map_io.hpp"
#include "root_enclose/report_json.hpp"
#include "root_enclose/solver.hpp"

namespace root_enclose {

using nlohmann::json;

namespace {

constexpr std::uint64_t kFallbackSeed = 42;
constexpr std::size_t kEqualityPointCap = 10;

struct GlobalOptions {
    bool json = false;
    std::uint64_t seed = kFallbackSeed;
    long samples = 10000;
    unsigned jobs = 1;
    std::string out_path;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("ROOT_ENCLOSE_SEED"); env != nullptr && *env != '\0') {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used, 10);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("ROOT_ENCLOSE_SEED is not an unsigned integer: '") + env + "'");
    }
    return kFallbackSeed;
}

SampleConfig sample_config(const GlobalOptions& g) {
    SampleConfig cfg;
    cfg.seed = g.seed;
    cfg.count = g.samples;
    return cfg;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string percent(long part, long whole) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << (whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole))
      << '%';
    return s.str();
}

void print_witness(std::ostream& os, const Witness& w) {
    os << "  witness: L = " << w.lo << ", r = " << w.root << ", U = " << w.hi << ", x = r^n = " << w.x << '\n';
    os << "  violated: " << w.violated << "  (" << w.lhs << " vs " << w.rhs << ")\n";
    if (w.image) {
        os << "  L  = " << w.lo << '\n'
           << "  L' = " << w.image->lo << '\n'
           << "  r  = " << w.root << '\n'
           << "  U' = " << w.image->hi << '\n'
           << "  U  = " << w.hi << '\n';
    }
}

void print_verdict(std::ostream& os, const std::string& title, const Verdict& v) {
    os << title << ": " << to_string(v.outcome) << " (" << v.samples_checked << " samples";
    if (v.source) os << ", found by " << to_string(*v.source);
    os << ")\n";
    if (v.witness) print_witness(os, *v.witness);
}

Rational parse_rational_flag(const std::string& text, const char* flag) {
    try {
        return Rational::parse_decimal(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

MapCoefficients load_map_or_usage(const std::string& path) {
    try {
        return load_map_file(path);
    } catch (const std::invalid_argument& e) {
        throw SpecError(e.what());
    }
}

// ---- root ------------------------------------------------------------------

struct RootOptions {
    std::string x;
    int n = 0;
    std::string eps;
    std::string map_path;
    std::string backend = "rational";
    long max_iter = kDefaultMaxIterations;
    bool trace = false;
};

int cmd_root(const GlobalOptions& g, const RootOptions& o, std::ostream& out) {
    const Rational x = parse_rational_flag(o.x, "--x");
    const Rational eps = parse_rational_flag(o.eps, "--eps");
    if (x.sign() <= 0) throw UsageError("--x must be positive, got " + x.to_string());
    if (eps.sign() <= 0) throw UsageError("--eps must be positive, got " + eps.to_string());
    if (o.n < 2) throw UsageError("--n must be >= 2");
    if (o.max_iter < 1) throw UsageError("--max-iter must be >= 1");
    const MapCoefficients map = o.map_path.empty() ? secant_newton(o.n) : load_map_or_usage(o.map_path);
    if (map.degree() != o.n) {
        throw UsageError("map degree " + std::to_string(map.degree()) + " does not match --n " + std::to_string(o.n));
    }

    if (o.backend == "float") {
        const FloatTrace trace = refine_float(x.to_double(), o.n, eps.to_double(), map, o.max_iter);
        if (g.json) {
            out << to_json(trace).dump(2) << '\n';
        } else {
            out << "interval: [" << format_double(trace.lo) << ", " << format_double(trace.hi) << "]\n"
                << "iterations: " << trace.iterations << '\n'
                << "terminated: " << to_string(trace.outcome) << '\n'
                << "note: float backend is not a guaranteed enclosure\n";
        }
        return trace.outcome == FloatOutcome::WidthReached ? kExitOk : kExitFalsified;
    }
    if (o.backend != "rational") throw UsageError("--backend must be rational or float");

    RefineTrace trace;
    try {
        trace = refine_to_eps(x, o.n, eps, map, o.max_iter);
    } catch (const DenominatorZero& e) {
        if (g.json) {
            out << json{{"error", "denominator-zero"}, {"iteration", e.iteration().value_or(0)}, {"message", e.what()}}.dump(2)
                << '\n';
        } else {
            out << "error: " << e.what() << '\n';
        }
        return kExitFalsified;
    } catch (const InvalidImage& e) {
        if (g.json) {
            out << json{{"error", "invalid-image"}, {"iteration", e.iteration()}, {"message", e.what()}}.dump(2) << '\n';
        } else {
            out << "error: " << e.what() << '\n';
        }
        return kExitFalsified;
    }

    if (g.json) {
        out << to_json(trace, o.trace).dump(2) << '\n';
    } else {
        out << "interval: " << trace.final_interval() << '\n'
            << "iterations: " << trace.iterations << '\n'
            << "terminated: " << to_string(trace.terminated) << '\n'
            << "width: " << trace.widths.back() << '\n';
        if (o.trace) {
            for (std::size_t i = 0; i < trace.intervals.size(); ++i) {
                out << "  " << i << ": " << trace.intervals[i] << "  width " << trace.widths[i] << '\n';
            }
        }
    }
    return trace.terminated == Termination::WidthReached ? kExitOk : kExitFalsified;
}

// ---- check -----------------------------------------------------------------

int cmd_check(const GlobalOptions& g, const std::string& map_path, std::ostream& out) {
    const MapCoefficients map = load_map_or_usage(map_path);
    const SampleConfig cfg = sample_config(g);
    const CanonicalReport canonical = check_canonical(map);
    std::optional<Verdict> bounds;
    if (canonical.is_canonical) bounds = check_denominator_bounds(map, cfg, g.jobs);
    const Verdict contraction = falsify_contraction(map, cfg, g.jobs);

    const bool falsified = !canonical.is_canonical || (bounds && bounds->outcome == Outcome::Falsified) ||
                           contraction.outcome == Outcome::Falsified;
    if (g.json) {
        json doc{{"n", map.degree()},
                 {"canonical", to_json(canonical)},
                 {"denominator_bounds", bounds ? to_json(*bounds) : json(nullptr)},
                 {"contraction", to_json(contraction)},
                 {"falsified", falsified}};
        out << doc.dump(2) << '\n';
    } else {
        out << "map degree n = " << map.degree() << '\n';
        out << "canonical form: " << (canonical.is_canonical ? "yes" : "no") << '\n';
        for (const CoefficientViolation& v : canonical.violations) {
            out << "  " << v.name << " = " << v.actual << ", required " << v.required << '\n';
        }
        if (bounds) {
            print_verdict(out, "denominator bounds", *bounds);
        } else {
            out << "denominator bounds: skipped (map is not canonical)\n";
        }
        print_verdict(out, "contraction", contraction);
    }
    return falsified ? kExitFalsified : kExitOk;
}

// ---- compare ---------------------------------------------------------------

int cmd_compare(const GlobalOptions& g, const std::string& map_path, std::ostream& out) {
    const MapCoefficients map = load_map_or_usage(map_path);
    const DominanceStats stats = check_dominance(map, sample_config(g), g.jobs);
    if (g.json) {
        out << to_json(stats, kEqualityPointCap).dump(2) << '\n';
    } else {
        out << "samples: " << stats.samples << '\n'
            << "subset: " << stats.subset_count << " (" << percent(stats.subset_count, stats.samples) << ")\n"
            << "proper subset: " << stats.proper_subset_count << " ("
            << percent(stats.proper_subset_count, stats.samples) << ")\n"
            << "equality points: " << stats.equality_points.size() << '\n';
        const std::size_t shown = std::min(kEqualityPointCap, stats.equality_points.size());
        for (std::size_t i = 0; i < shown; ++i) {
            const TriplePoint& p = stats.equality_points[i];
            out << "  (L, r, U) = (" << p.lo << ", " << p.root << ", " << p.hi << ")\n";
        }
        if (shown < stats.equality_points.size()) out << "  ...\n";
        out << "violations: " << stats.violations.size() << '\n';
        if (!stats.violations.empty()) print_witness(out, stats.violations.front());
    }
    return stats.violations.empty() ? kExitOk : kExitFalsified;
}

// ---- locus -----------------------------------------------------------------

struct LocusOptions {
    std::string map_path;
    std::string lo;
    std::string hi;
    std::string x;
    std::string root;
};

int cmd_locus(const GlobalOptions& g, const LocusOptions& o, std::ostream& out) {
    const MapCoefficients map = load_map_or_usage(o.map_path);
    if (!check_canonical(map).is_canonical) throw UsageError("locus requires a canonical map (run check first)");
    const EqualityLocus locus = equality_locus(map);

    std::optional<std::pair<Rational, Rational>> value;
    json point = nullptr;
    if (!o.lo.empty() || !o.hi.empty() || !o.x.empty() || !o.root.empty()) {
        if (o.lo.empty() || o.hi.empty() || (o.x.empty() == o.root.empty())) {
            throw UsageError("a locus point needs --L, --U and exactly one of --x / --r");
        }
        const Rational lo = parse_rational_flag(o.lo, "--L");
        const Rational hi = parse_rational_flag(o.hi, "--U");
        const Rational x = o.x.empty() ? pow_int(parse_rational_flag(o.root, "--r"), static_cast<unsigned>(map.degree()))
                                       : parse_rational_flag(o.x, "--x");
        value = evaluate_locus(map, lo, hi, x);
        point = json{{"L", lo.to_string()}, {"U", hi.to_string()}, {"x", x.to_string()},
                     {"f_p", value->first.to_string()}, {"f_q", value->second.to_string()}};
    }

    if (g.json) {
        json doc = to_json(locus);
        doc["point"] = point;
        out << doc.dump(2) << '\n';
    } else {
        out << "f_p = (" << locus.f_p.vanishing_factor.to_string() << ")*(" << locus.f_p.cofactor.to_string() << ")\n"
            << "f_q = (" << locus.f_q.vanishing_factor.to_string() << ")*(" << locus.f_q.cofactor.to_string() << ")\n";
        if (value) out << "value: (" << value->first << ", " << value->second << ")\n";
    }
    return kExitOk;
}

// ---- counterexample ----------------------------------------------------------

int cmd_counterexample(const GlobalOptions& g, bool original_q0, bool show_locus, std::ostream& out) {
    const MapCoefficients example = cubic_equality_example(original_q0);
    const MapCoefficients reference = secant_newton(3);
    const Interval box(1, 2);
    const Rational x = pow_int(Rational(3, 2), 3);

    const RefinedPair sn = apply(reference, box, x);
    const RefinedPair other = apply(example, box, x);
    const bool equal = sn == other;
    const CanonicalReport canonical = check_canonical(example);
    std::optional<std::pair<Rational, Rational>> locus_value;
    std::optional<EqualityLocus> locus;
    if (canonical.is_canonical) {
        locus_value = evaluate_locus(example, box.lo(), box.hi(), x);
        locus = equality_locus(example);
    }
    std::optional<Verdict> diagnostic;
    if (original_q0) diagnostic = falsify_contraction(example, sample_config(g), g.jobs);

    if (g.json) {
        json doc{{"L", "1"}, {"U", "2"}, {"x", x.to_string()},
                 {"secant_newton", to_json(sn)}, {"example", to_json(other)}, {"equal", equal},
                 {"original_q0", original_q0}};
        doc["locus_value"] = locus_value ? json::array({locus_value->first.to_string(), locus_value->second.to_string()})
                                         : json(nullptr);
        if (show_locus && locus) doc["locus"] = to_json(*locus);
        if (diagnostic) doc["contraction"] = to_json(*diagnostic);
        out << doc.dump(2) << '\n';
    } else {
        out << "map: n = 3, p = (-1,0,0,0,2,1/2,1), q = (" << (original_q0 ? "1" : "-1") << ",0,0,0,3,0,0)\n"
            << "point: [L, U] = [1, 2], x = (3/2)^3 = " << x << '\n'
            << "secant-newton: [" << sn.lo << ", " << sn.hi << "]\n"
            << "example map:   [" << other.lo << ", " << other.hi << "]\n"
            << "equal: " << (equal ? "yes" : "no") << '\n';
        if (locus_value) out << "locus value: (" << locus_value->first << ", " << locus_value->second << ")\n";
        if (show_locus && locus) {
            out << "f_p = (" << locus->f_p.vanishing_factor.to_string() << ")*(" << locus->f_p.cofactor.to_string()
                << ")\n"
                << "f_q = (" << locus->f_q.vanishing_factor.to_string() << ")*(" << locus->f_q.cofactor.to_string()
                << ")\n";
        }
        if (diagnostic) {
            out << "diagnostic: q0 = 1 violates the canonical form (q0 must be -1 for a contracting map)\n";
            print_verdict(out, "contraction", *diagnostic);
        }
    }
    return equal ? kExitOk : kExitFalsified;
}

// ---- bench -----------------------------------------------------------------

int cmd_bench(const GlobalOptions& g, const std::string& spec_path, const std::string& format, std::ostream& out,
              std::ostream& err) {
    if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
    const BenchSpec spec = spec_path.empty() ? default_bench_spec() : load_bench_spec(spec_path);
    const std::vector<BenchRow> rows = run_bench(spec, g.jobs);
    const bool as_json = g.json || format == "json";
    out << emit(rows, as_json ? EmitFormat::Json : EmitFormat::Csv);
    if (spec.backend == Backend::Rational) {
        err << "note: rational-backend timings are dominated by numerator/denominator growth\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Guaranteed nth-root enclosures and refinement-map verification", "root_enclose"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    std::string seed_text;
    app.add_flag("--json", g.json, "Emit JSON");
    app.add_option("--seed", seed_text, "Sampling seed (default: $ROOT_ENCLOSE_SEED or 42)");
    app.add_option("--samples", g.samples, "Number of sampled triples")->check(CLI::PositiveNumber);
    app.add_option("--jobs", g.jobs, "Worker threads for sampling")->check(CLI::Range(1u, 1024u));
    app.add_option("--out", g.out_path, "Write output to this file instead of stdout");

    RootOptions root;
    auto* root_cmd = app.add_subcommand("root", "Enclose the nth root of x to width eps");
    root_cmd->add_option("--x", root.x, "Radicand (a/b, integer or decimal)")->required();
    root_cmd->add_option("--n", root.n, "Root degree (>= 2)")->required();
    root_cmd->add_option("--eps", root.eps, "Width bound (a/b or decimal such as 1e-12)")->required();
    root_cmd->add_option("--map", root.map_path, "Map specification file (default: Secant-Newton)");
    root_cmd->add_option("--backend", root.backend, "rational or float")->check(CLI::IsMember({"rational", "float"}));
    root_cmd->add_option("--max-iter", root.max_iter, "Iteration cap");
    root_cmd->add_flag("--trace", root.trace, "Print every interval");

    std::string check_map;
    auto* check_cmd = app.add_subcommand("check", "Check a map for canonical form, denominator bounds and contraction");
    check_cmd->add_option("map", check_map, "Map specification file")->required();

    std::string compare_map;
    auto* compare_cmd = app.add_subcommand("compare", "Compare a map against Secant-Newton on sampled points");
    compare_cmd->add_option("map", compare_map, "Map specification file")->required();

    LocusOptions locus;
    auto* locus_cmd = app.add_subcommand("locus", "Print the equality-locus polynomials of a canonical map");
    locus_cmd->add_option("map", locus.map_path, "Map specification file")->required();
    locus_cmd->add_option("--L", locus.lo, "Lower endpoint of an evaluation point");
    locus_cmd->add_option("--U", locus.hi, "Upper endpoint of an evaluation point");
    locus_cmd->add_option("--x", locus.x, "Radicand of an evaluation point");
    locus_cmd->add_option("--r", locus.root, "Root of an evaluation point (x = r^n)");

    bool original_q0 = false;
    bool show_locus = false;
    auto* cex_cmd = app.add_subcommand("counterexample", "Reproduce the cubic equality example");
    cex_cmd->add_flag("--strict-paper-q", original_q0, "Use q0 = 1 as originally printed");
    cex_cmd->add_flag("--locus", show_locus, "Also print the locus polynomials");

    std::string bench_spec;
    std::string bench_format = "csv";
    auto* bench_cmd = app.add_subcommand("bench", "Run convergence/timing benchmarks");
    bench_cmd->add_option("spec", bench_spec, "Bench specification file (default: built-in)");
    bench_cmd->add_option("--format", bench_format, "csv or json");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ostringstream buffer;
    int code = kExitOk;
    try {
        g.seed = seed_text.empty() ? default_seed() : std::stoull(seed_text);
        if (*root_cmd) code = cmd_root(g, root, buffer);
        if (*check_cmd) code = cmd_check(g, check_map, buffer);
        if (*compare_cmd) code = cmd_compare(g, compare_map, buffer);
        if (*locus_cmd) code = cmd_locus(g, locus, buffer);
        if (*cex_cmd) code = cmd_counterexample(g, original_q0, show_locus, buffer);
        if (*bench_cmd) code = cmd_bench(g, bench_spec, bench_format, buffer, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SpecError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (g.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(g.out_path);
        if (!file) {
            err << "error: cannot write '" << g.out_path << "'\n";
            return kExitUsage;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace root_enclose
