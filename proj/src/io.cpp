#include "rulerfold/io.hpp"

#include <sstream>

#include "rulerfold/errors.hpp"

namespace rulerfold {

namespace {

Json rational_array(std::span<const Rational> xs) {
    Json arr = Json::array();
    for (const Rational& x : xs) arr.push_back(x.str());
    return arr;
}

std::vector<Rational> rationals_from_json(const Json& j, const char* field) {
    if (!j.is_array()) throw ParseError(std::string("\"") + field + "\" must be an array");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const Json& e : j) out.push_back(rational_from_json(e));
    return out;
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
    return *it;
}

}  // namespace

Json to_json(const Rational& x) { return x.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("rational values must be \"p/q\" strings, got " + j.dump());
}

Json to_json(const RulerInstance& instance) { return Json{{"lengths", rational_array(instance.lengths())}}; }

RulerInstance instance_from_json(const Json& j) {
    std::vector<Rational> lengths = rationals_from_json(field(j, "lengths"), "lengths");
    try {
        return RulerInstance(std::move(lengths));
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
}

RulerInstance parse_instance(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return instance_from_json(j);
}

std::string emit_instance(const RulerInstance& instance) { return to_json(instance).dump(); }

Json to_json(const FoldingEvaluation& ev) {
    return Json{{"prefix_sums", rational_array(ev.prefix_sums)},
                {"max_s", ev.max_s.str()},
                {"min_s", ev.min_s.str()},
                {"range", ev.range.str()}};
}

Json to_json(const StepCoverResult& result) {
    return Json{{"value", result.value.str()}, {"witness", result.witness.str()}, {"explored", result.explored}};
}

Json to_json(const GreedyFolding& greedy) {
    Json j{{"signs", greedy.signs.str()}};
    Json ev = to_json(greedy.evaluation);
    j.update(ev);
    return j;
}

Json to_json(const ExtremalInstance& ext) {
    return Json{{"m", ext.m},
                {"n", ext.instance.size()},
                {"delta", ext.delta.str()},
                {"lengths", rational_array(ext.instance.lengths())}};
}

Json to_json(const LowerBoundReport& report) {
    Json hist = Json::array();
    for (const auto& [range, count] : report.histogram) hist.push_back(Json{{"range", range.str()}, {"count", count}});
    return Json{{"bound", report.bound.str()},
                {"min_range", report.min_range.str()},
                {"count_at_min", report.count_at_min},
                {"total", report.total},
                {"alternating_range", report.alternating.str()},
                {"non_alternating_below_bound", report.non_alternating_below_bound},
                {"holds", report.holds()},
                {"histogram", hist}};
}

Json to_json(const PiecewiseConstantDensity& q) {
    return Json{{"breakpoints", rational_array(q.breakpoints())}, {"values", rational_array(q.values())}};
}

PiecewiseConstantDensity density_from_json(const Json& j) {
    std::vector<Rational> b = rationals_from_json(field(j, "breakpoints"), "breakpoints");
    std::vector<Rational> v = rationals_from_json(field(j, "values"), "values");
    try {
        return PiecewiseConstantDensity(std::move(b), std::move(v));
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
}

Json to_json(const BoundCertificate& cert) {
    return Json{{"m", cert.m},
                {"epsilon", cert.epsilon.str()},
                {"r", rational_array(cert.fringe_masses)},
                {"total", cert.total.str()},
                {"holds", cert.holds}};
}

Json to_json(const ClaimReport& report) {
    return Json{{"max_q", report.max_q.str()},
                {"max_q1", report.max_q1.str()},
                {"max_q2", report.max_q2.str()},
                {"holds", report.holds}};
}

Json to_json(const FitEstimate& est) {
    return Json{{"n", est.n},
                {"best_value", est.best_value.str()},
                {"best_instance", rational_array(est.best_instance.lengths())},
                {"method", std::string(to_string(est.method))},
                {"seed", est.seed},
                {"iterations", est.iterations}};
}

std::string fit_estimates_to_csv(const std::vector<FitEstimate>& rows) {
    std::ostringstream out;
    out << "n,best_value,best_instance,method,seed\n";
    for (const FitEstimate& est : rows) {
        out << est.n << ',' << est.best_value << ',';
        for (std::size_t i = 0; i < est.best_instance.size(); ++i) {
            out << (i ? " " : "") << est.best_instance[i];
        }
        out << ',' << to_string(est.method) << ',' << est.seed << '\n';
    }
    return out.str();
}

Json to_json(const MonotonicityReport& report) {
    Json entries = Json::array();
    for (const MonotonicityEntry& e : report.entries) {
        entries.push_back(Json{{"n", e.n},
                               {"value", e.value.str()},
                               {"deficient", e.deficient},
                               {"upper_bound", e.upper_bound.str()},
                               {"within_upper_bound", e.within_upper_bound}});
    }
    return Json{{"entries", entries},
                {"padding_preserved", report.padding_preserved},
                {"upper_bounds_ok", report.upper_bounds_ok}};
}

}  // namespace rulerfold
