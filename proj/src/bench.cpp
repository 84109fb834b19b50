#include "root_enclose/bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "root_enclose/map_io.hpp"
#include "root_enclose/solver.hpp"

namespace root_enclose {

using nlohmann::json;

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

BenchMap resolve_map(const std::string& entry) {
    if (entry == kSecantNewtonName || entry == kBisectionName) return {entry, std::nullopt};
    if (std::ifstream(entry).good()) return {entry, load_map_file(entry)};
    throw SpecError("unknown map '" + entry + "' (expected \"secant-newton\", \"bisection\", or a map file)");
}

template <class T, class Parse>
std::vector<T> array_field(const json& doc, const char* key, Parse parse) {
    if (!doc.contains(key) || !doc.at(key).is_array() || doc.at(key).empty()) {
        throw SpecError(std::string("bench spec needs a non-empty array \"") + key + "\"");
    }
    std::vector<T> out;
    for (const json& v : doc.at(key)) {
        try {
            out.push_back(parse(v));
        } catch (const SpecError&) {
            throw;
        } catch (const std::exception& e) {
            throw SpecError(std::string("bad entry in \"") + key + "\": " + e.what());
        }
    }
    return out;
}

Rational parse_number(const json& v) {
    if (v.is_string()) return Rational::parse_decimal(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw SpecError("expected a rational string");
}

BenchRow run_rational(const BenchMap& map, const Rational& x, int n, const Rational& eps, long max_iter) {
    BenchRow row{map.name, Backend::Rational, n, x.to_string(), eps.to_string(), 0, "", 0, "ok"};
    const auto start = std::chrono::steady_clock::now();
    try {
        RefineTrace trace;
        if (map.name == kBisectionName && !map.coefficients) {
            trace = bisect_to_eps(x, n, eps, max_iter);
        } else {
            const MapCoefficients coefficients = map.coefficients ? *map.coefficients : secant_newton(n);
            if (coefficients.degree() != n) {
                row.status = "degree-mismatch";
            } else {
                trace = refine_to_eps(x, n, eps, coefficients, max_iter);
            }
        }
        if (row.status == "ok") {
            row.iterations = trace.iterations;
            if (trace.terminated == Termination::MaxIterations) {
                row.status = "max-iterations";
            } else {
                row.final_width = trace.widths.back().to_string();
            }
        }
    } catch (const DenominatorZero& e) {
        row.status = "denominator-zero";
        row.iterations = e.iteration().value_or(1) - 1;
    } catch (const InvalidImage& e) {
        row.status = "invalid-image";
        row.iterations = e.iteration() - 1;
    }
    row.wall_time_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
    if (row.status != "ok") row.final_width = row.status;
    return row;
}

BenchRow run_float(const BenchMap& map, const Rational& x, int n, const Rational& eps, long max_iter) {
    BenchRow row{map.name, Backend::Float, n, x.to_string(), eps.to_string(), 0, "", 0, "ok"};
    const auto start = std::chrono::steady_clock::now();
    FloatTrace trace;
    if (map.name == kBisectionName && !map.coefficients) {
        trace = bisect_float(x.to_double(), n, eps.to_double(), max_iter);
    } else {
        const MapCoefficients coefficients = map.coefficients ? *map.coefficients : secant_newton(n);
        if (coefficients.degree() != n) {
            row.status = "degree-mismatch";
        } else {
            trace = refine_float(x.to_double(), n, eps.to_double(), coefficients, max_iter);
        }
    }
    row.wall_time_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
    if (row.status == "ok") {
        row.iterations = trace.iterations;
        switch (trace.outcome) {
            case FloatOutcome::WidthReached: break;
            case FloatOutcome::Stalled: row.status = "stalled"; break;
            case FloatOutcome::MaxIterations: row.status = "max-iterations"; break;
            case FloatOutcome::NumericFailure: row.status = "numeric-failure"; break;
        }
    }
    row.final_width = row.status == "ok" ? format_double(trace.hi - trace.lo) : row.status;
    return row;
}

}  // namespace

BenchSpec bench_spec_from_json(const json& doc) {
    if (!doc.is_object()) throw SpecError("bench spec must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "maps" && key != "xs" && key != "ns" && key != "epses" && key != "backend" && key != "reps" &&
            key != "max_iter") {
            throw SpecError("unknown field \"" + key + "\" in bench spec");
        }
    }
    BenchSpec spec;
    spec.maps = array_field<BenchMap>(doc, "maps", [](const json& v) {
        if (!v.is_string()) throw SpecError("map entries must be strings");
        return resolve_map(v.get<std::string>());
    });
    spec.xs = array_field<Rational>(doc, "xs", [](const json& v) {
        Rational x = parse_number(v);
        if (x.sign() <= 0) throw SpecError("xs must be positive, got " + x.to_string());
        return x;
    });
    spec.ns = array_field<int>(doc, "ns", [](const json& v) {
        if (!v.is_number_integer() || v.get<long>() < 2 || v.get<long>() > 4096) {
            throw SpecError("ns entries must be integers in [2, 4096]");
        }
        return v.get<int>();
    });
    spec.epses = array_field<Rational>(doc, "epses", [](const json& v) {
        Rational eps = parse_number(v);
        if (eps.sign() <= 0) throw SpecError("epses must be positive, got " + eps.to_string());
        return eps;
    });
    if (doc.contains("backend")) {
        const json& b = doc.at("backend");
        if (b == "rational") {
            spec.backend = Backend::Rational;
        } else if (b == "float") {
            spec.backend = Backend::Float;
        } else {
            throw SpecError("backend must be \"rational\" or \"float\"");
        }
    }
    if (doc.contains("reps")) {
        if (!doc.at("reps").is_number_integer() || doc.at("reps").get<long>() < 1) {
            throw SpecError("reps must be a positive integer");
        }
        spec.reps = doc.at("reps").get<int>();
    }
    if (doc.contains("max_iter")) {
        if (!doc.at("max_iter").is_number_integer() || doc.at("max_iter").get<long>() < 1) {
            throw SpecError("max_iter must be a positive integer");
        }
        spec.max_iter = doc.at("max_iter").get<long>();
    }
    return spec;
}

BenchSpec load_bench_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open bench spec '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    json doc;
    try {
        doc = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw SpecError(std::string("bench spec is not valid JSON: ") + e.what());
    }
    return bench_spec_from_json(doc);
}

BenchSpec default_bench_spec() {
    return bench_spec_from_json(json{{"maps", {kSecantNewtonName, kBisectionName}},
                                     {"xs", {"2", "3", "27/8", "1/2"}},
                                     {"ns", {2, 3}},
                                     {"epses", {"1/1000", "1e-12"}},
                                     {"backend", "rational"},
                                     {"reps", 5}});
}

std::vector<BenchRow> run_bench(const BenchSpec& spec, unsigned jobs) {
    struct Job {
        const BenchMap* map;
        const Rational* x;
        int n;
        const Rational* eps;
    };
    std::vector<Job> work;
    for (const BenchMap& map : spec.maps)
        for (const Rational& x : spec.xs)
            for (int n : spec.ns)
                for (const Rational& eps : spec.epses)
                    for (int r = 0; r < spec.reps; ++r) work.push_back({&map, &x, n, &eps});

    std::vector<BenchRow> rows(work.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < work.size(); i = next.fetch_add(1)) {
            const Job& job = work[i];
            rows[i] = spec.backend == Backend::Rational
                          ? run_rational(*job.map, *job.x, job.n, *job.eps, spec.max_iter)
                          : run_float(*job.map, *job.x, job.n, *job.eps, spec.max_iter);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }
    return rows;
}

json row_to_json(const BenchRow& row) {
    return json{{"map", row.map},
                {"backend", to_string(row.backend)},
                {"n", row.n},
                {"x", row.x},
                {"eps", row.eps},
                {"iterations", row.iterations},
                {"final_width", row.final_width},
                {"wall_time_ns", row.wall_time_ns},
                {"status", row.status}};
}

BenchRow row_from_json(const json& doc) {
    BenchRow row;
    row.map = doc.at("map").get<std::string>();
    const auto backend = doc.at("backend").get<std::string>();
    if (backend != "rational" && backend != "float") throw SpecError("unknown backend '" + backend + "'");
    row.backend = backend == "rational" ? Backend::Rational : Backend::Float;
    row.n = doc.at("n").get<int>();
    row.x = doc.at("x").get<std::string>();
    row.eps = doc.at("eps").get<std::string>();
    row.iterations = doc.at("iterations").get<long>();
    row.final_width = doc.at("final_width").get<std::string>();
    row.wall_time_ns = doc.at("wall_time_ns").get<long long>();
    row.status = doc.value("status", std::string("ok"));
    return row;
}

std::string emit(const std::vector<BenchRow>& rows, EmitFormat format) {
    if (format == EmitFormat::Json) {
        json arr = json::array();
        for (const BenchRow& row : rows) arr.push_back(row_to_json(row));
        return arr.dump(2) + "\n";
    }
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const BenchRow& row : rows) {
        out << csv_field(row.map) << ',' << to_string(row.backend) << ',' << row.n << ',' << row.x << ',' << row.eps
            << ',' << row.iterations << ',' << csv_field(row.final_width) << ',' << row.wall_time_ns << '\n';
    }
    return out.str();
}

std::string to_string(Backend backend) { return backend == Backend::Rational ? "rational" : "float"; }

}  // namespace root_enclose
