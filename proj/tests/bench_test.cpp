#include <doctest.h>

#include <sstream>

#include "root_enclose/bench.hpp"
#include "root_enclose/map_io.hpp"
#include "root_enclose/solver.hpp"
#include "support/generators.hpp"

using namespace root_enclose;
using namespace root_enclose::testing;
using nlohmann::json;

namespace {

BenchSpec spec_for(std::vector<std::string> maps, std::vector<std::string> xs, std::vector<int> ns,
                   std::vector<std::string> epses, int reps = 1) {
    return bench_spec_from_json(json{{"maps", maps}, {"xs", xs}, {"ns", ns}, {"epses", epses}, {"reps", reps}});
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, sep)) out.push_back(field);
    return out;
}

}  // namespace

TEST_CASE("Secant-Newton against bisection") {
    const auto rows = run_bench(spec_for({kSecantNewtonName, kBisectionName}, {"2"}, {2}, {"1/1000"}));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].map == kSecantNewtonName);
    CHECK(rows[0].iterations == 3);
    CHECK(rows[0].final_width == "1/235416");
    CHECK(rows[1].map == kBisectionName);
    CHECK(rows[1].iterations == 10);
    CHECK(rows[1].final_width == "1/1024");
    for (const BenchRow& r : rows) CHECK(r.status == "ok");
}

TEST_CASE("x = 1 needs no iterations") {
    for (const BenchRow& r : run_bench(spec_for({kSecantNewtonName, kBisectionName}, {"1"}, {2, 3}, {"1/10"})))
        CHECK(r.iterations == 0);
}

TEST_CASE("row nesting and repetitions") {
    const auto rows = run_bench(spec_for({kSecantNewtonName, kBisectionName}, {"2", "3"}, {2, 3}, {"1/10"}, 2), 3);
    REQUIRE(rows.size() == 16);
    CHECK(rows[0].map == kSecantNewtonName);
    CHECK(rows[0].x == "2");
    CHECK(rows[0].n == 2);
    CHECK(rows[1].iterations == rows[0].iterations);
    CHECK(rows[2].n == 3);
    CHECK(rows[4].x == "3");
    CHECK(rows[8].map == kBisectionName);
}

TEST_CASE("property: dominating maps never need more iterations") {
    Rng rng(404);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + trial % 2;
        const MapCoefficients m = certified_contracting_map(n, rng, trial % 2 == 0);
        const Rational x = random_positive(rng, 20);
        const Rational eps(1, 1000);
        const RefineTrace other = refine_to_eps(x, n, eps, m, 6);
        const RefineTrace sn = refine_to_eps(x, n, eps, secant_newton(n), 6);
        CHECK(sn.iterations <= other.iterations);
    }
}

TEST_CASE("CSV and JSON emission") {
    const auto rows = run_bench(spec_for({kSecantNewtonName}, {"27/8", "1/2"}, {3}, {"1e-3"}));
    const std::string csv = emit(rows, EmitFormat::Csv);
    std::stringstream ss(csv);
    std::string line;
    std::getline(ss, line);
    CHECK(line == kCsvHeader);
    int count = 0;
    while (std::getline(ss, line)) {
        const auto fields = split(line, ',');
        CHECK(fields.size() == 8);
        CHECK(fields[0] == kSecantNewtonName);
        CHECK(fields[1] == "rational");
        ++count;
    }
    CHECK(count == 2);
    CHECK(emit({}, EmitFormat::Csv) == std::string(kCsvHeader) + "\n");
    CHECK(emit({}, EmitFormat::Json) == "[]\n");

    const json doc = json::parse(emit(rows, EmitFormat::Json));
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(row_from_json(doc[i]) == rows[i]);
}

TEST_CASE("float backend rows") {
    BenchSpec spec = spec_for({kSecantNewtonName, kBisectionName}, {"2"}, {2}, {"1e-6"});
    spec.backend = Backend::Float;
    const auto rows = run_bench(spec);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].backend == Backend::Float);
    CHECK(rows[0].iterations == 4);
    CHECK(rows[1].iterations == 20);
}

TEST_CASE("iteration counts match independent solver runs") {
    const auto rows = run_bench(spec_for({kSecantNewtonName, kBisectionName}, {"2", "27/8", "1/2"}, {2, 3}, {"1e-6"}, 2));
    for (const BenchRow& r : rows) {
        const Rational x = Rational::parse(r.x);
        const Rational eps = Rational::parse(r.eps);
        const RefineTrace t = r.map == kBisectionName ? bisect_to_eps(x, r.n, eps) : refine_to_eps(x, r.n, eps, secant_newton(r.n));
        CHECK(r.iterations == t.iterations);
        CHECK(r.final_width == t.widths.back().to_string());
    }
}

TEST_CASE("failures are recorded in the row") {
    BenchSpec spec = spec_for({kSecantNewtonName}, {"2"}, {2}, {"1e-12"});
    spec.max_iter = 2;
    const auto rows = run_bench(spec);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].status == "max-iterations");
    CHECK(rows[0].final_width == "max-iterations");
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(spec_for({"no-such-map"}, {"2"}, {2}, {"1/10"}), SpecError);
    CHECK_THROWS_AS(spec_for({kSecantNewtonName}, {"-2"}, {2}, {"1/10"}), SpecError);
    CHECK_THROWS_AS(spec_for({kSecantNewtonName}, {"2"}, {1}, {"1/10"}), SpecError);
    CHECK_THROWS_AS(spec_for({kSecantNewtonName}, {"2"}, {2}, {"0"}), SpecError);
    CHECK_THROWS_AS(bench_spec_from_json(json{{"maps", {kSecantNewtonName}}, {"bogus", 1}}), SpecError);
    CHECK_THROWS_AS(load_bench_spec("/nonexistent/bench.json"), SpecError);

    const BenchSpec d = default_bench_spec();
    CHECK(d.maps.size() == 2);
    CHECK(d.backend == Backend::Rational);
}
