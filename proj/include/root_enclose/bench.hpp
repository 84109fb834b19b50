#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "root_enclose/maps.hpp"
#include "root_enclose/numeric.hpp"

namespace root_enclose {

enum class Backend { Rational, Float };

/// A map to benchmark: a built-in name or a coefficient file.
struct BenchMap {
    std::string name;           // "secant-newton", "bisection", or the file path
    std::optional<MapCoefficients> coefficients;  // set for file maps
};

struct BenchSpec {
    std::vector<BenchMap> maps;
    std::vector<Rational> xs;
    std::vector<int> ns;
    std::vector<Rational> epses;
    Backend backend = Backend::Rational;
    int reps = 5;
    long max_iter = 10000;
};

struct BenchRow {
    std::string map;
    Backend backend = Backend::Rational;
    int n = 2;
    std::string x;
    std::string eps;
    long iterations = 0;
    /// Reduced rational (rational backend), %.17g decimal (float backend),
    /// or the failure tag when status != "ok".
    std::string final_width;
    long long wall_time_ns = 0;
    /// "ok", "max-iterations", "denominator-zero", "invalid-image",
    /// "degree-mismatch", "stalled", "numeric-failure".
    std::string status = "ok";

    friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

inline constexpr const char* kSecantNewtonName = "secant-newton";
inline constexpr const char* kBisectionName = "bisection";
inline constexpr const char* kCsvHeader = "map,backend,n,x,eps,iterations,final_width,wall_time_ns";

/// Spec file: {"maps": [...], "xs": [...], "ns": [...], "epses": [...],
/// "backend": "rational"|"float", "reps": k}. Map entries are built-in
/// names or paths to map files; xs and epses are rational or decimal strings.
/// Throws SpecError on malformed input or unknown map names.
BenchSpec bench_spec_from_json(const nlohmann::json& doc);
BenchSpec load_bench_spec(const std::string& path);
BenchSpec default_bench_spec();

/// One row per (map, x, n, eps, repetition) in that nesting order.
/// Per-row failures are recorded in the row.
std::vector<BenchRow> run_bench(const BenchSpec& spec, unsigned jobs = 1);

enum class EmitFormat { Csv, Json };

std::string emit(const std::vector<BenchRow>& rows, EmitFormat format);
nlohmann::json row_to_json(const BenchRow& row);
BenchRow row_from_json(const nlohmann::json& doc);

std::string to_string(Backend backend);

}  // namespace root_enclose
