#include "root_enclose/report_json.hpp"

#include <algorithm>

namespace root_enclose {

using nlohmann::json;

json to_json(const Interval& interval) { return json::array({interval.lo().to_string(), interval.hi().to_string()}); }

json to_json(const RefinedPair& pair) { return json::array({pair.lo.to_string(), pair.hi.to_string()}); }

json to_json(const Witness& w) {
    json out{{"L", w.lo.to_string()},    {"r", w.root.to_string()}, {"U", w.hi.to_string()},
             {"x", w.x.to_string()},     {"violated", w.violated},  {"lhs", w.lhs.to_string()},
             {"rhs", w.rhs.to_string()}};
    out["image"] = w.image ? to_json(*w.image) : json(nullptr);
    return out;
}

json to_json(const Verdict& v) {
    json out{{"outcome", to_string(v.outcome)}, {"samples_checked", v.samples_checked}};
    out["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
    out["source"] = v.source ? json(to_string(*v.source)) : json(nullptr);
    return out;
}

json to_json(const CanonicalReport& report) {
    json violations = json::array();
    for (const CoefficientViolation& v : report.violations) {
        violations.push_back({{"name", v.name}, {"required", v.required.to_string()}, {"actual", v.actual.to_string()}});
    }
    return json{{"is_canonical", report.is_canonical}, {"violations", std::move(violations)}};
}

json to_json(const DominanceStats& stats, std::size_t max_points) {
    json points = json::array();
    const std::size_t shown = std::min(max_points, stats.equality_points.size());
    for (std::size_t i = 0; i < shown; ++i) {
        const TriplePoint& p = stats.equality_points[i];
        points.push_back(json::array({p.lo.to_string(), p.root.to_string(), p.hi.to_string()}));
    }
    json violations = json::array();
    for (const Witness& w : stats.violations) violations.push_back(to_json(w));
    return json{{"samples", stats.samples},
                {"subset_count", stats.subset_count},
                {"proper_subset_count", stats.proper_subset_count},
                {"equality_point_count", stats.equality_points.size()},
                {"equality_points", std::move(points)},
                {"violations", std::move(violations)}};
}

json to_json(const EqualityLocus& locus) {
    auto side = [](const LocusPolynomial& f) {
        return json{{"vanishing_factor", f.vanishing_factor.to_string()},
                    {"cofactor", f.cofactor.to_string()},
                    {"expanded", f.expanded().to_string()}};
    };
    return json{{"f_p", side(locus.f_p)}, {"f_q", side(locus.f_q)}};
}

json to_json(const RefineTrace& trace, bool include_intervals) {
    json out{{"iterations", trace.iterations},
             {"terminated", to_string(trace.terminated)},
             {"interval", to_json(trace.final_interval())},
             {"width", trace.widths.back().to_string()}};
    if (include_intervals) {
        json intervals = json::array();
        for (const Interval& i : trace.intervals) intervals.push_back(to_json(i));
        out["intervals"] = std::move(intervals);
    }
    return out;
}

json to_json(const FloatTrace& trace) {
    return json{{"iterations", trace.iterations},
                {"terminated", to_string(trace.outcome)},
                {"interval", json::array({trace.lo, trace.hi})},
                {"width", trace.hi - trace.lo},
                {"rigorous", false}};
}

}  // namespace root_enclose
