#include "qgame/scenario_file.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qgame {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& context) {
    for (const auto& item : obj.items()) {
        if (!allowed.count(item.key())) {
            std::string known;
            for (const auto& k : allowed) {
                if (!known.empty()) known += ", ";
                known += k;
            }
            throw ParseError("unknown key \"" + item.key() + "\" in " +
                             context + " (expected one of: " + known + ")");
        }
    }
}

double finite_number(const json& v, const std::string& context) {
    if (!v.is_number()) {
        throw ParseError(context + ": expected a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw ParseError(context + ": number must be finite");
    }
    return x;
}

long long integer_value(const json& v, const std::string& context) {
    if (!v.is_number_integer()) {
        throw ParseError(context + ": expected an integer");
    }
    return v.get<long long>();
}

Complex complex_entry(const json& v, const std::string& context) {
    if (v.is_number()) {
        return Complex(finite_number(v, context), 0.0);
    }
    if (v.is_object()) {
        check_keys(v, {"re", "im"}, context);
        double re = 0.0, im = 0.0;
        if (v.contains("re")) re = finite_number(v["re"], context + ".re");
        if (v.contains("im")) im = finite_number(v["im"], context + ".im");
        return Complex(re, im);
    }
    throw ParseError(context + ": expected a number or {re, im}");
}

HalfInteger half_integer_param(const json& v, const std::string& context) {
    try {
        if (v.is_string()) return HalfInteger::parse(v.get<std::string>());
        if (v.is_number()) return HalfInteger::from_double(v.get<double>());
    } catch (const RepresentationError& e) {
        throw ParseError(context + ": " + e.what());
    }
    throw ParseError(context + ": expected a half-integer (e.g. \"3/2\" or 1.5)");
}

std::vector<int> int_list(const json& v, const std::string& context) {
    if (!v.is_array() || v.empty()) {
        throw ParseError(context + ": expected a non-empty array of integers");
    }
    std::vector<int> out;
    for (const auto& e : v) {
        out.push_back(static_cast<int>(integer_value(e, context)));
    }
    return out;
}

std::vector<BilinearPayoff> parse_bilinears(const json& v,
                                            const std::string& context) {
    if (!v.is_array()) {
        throw ParseError(context + ": expected an array of payoff objects");
    }
    std::vector<BilinearPayoff> out;
    for (size_t i = 0; i < v.size(); ++i) {
        const json& entry = v[i];
        const std::string ctx = context + "[" + std::to_string(i) + "]";
        if (!entry.is_object()) {
            throw ParseError(ctx + ": expected an object");
        }
        check_keys(entry, {"name", "coefficients"}, ctx);
        if (!entry.contains("name") || !entry["name"].is_string()) {
            throw ParseError(ctx + ": missing string \"name\"");
        }
        if (!entry.contains("coefficients") ||
            !entry["coefficients"].is_array()) {
            throw ParseError(ctx + ": missing array \"coefficients\"");
        }
        const json& rows = entry["coefficients"];
        const size_t k = rows.size();
        OperatorMatrix coeff(k, k);
        for (size_t r = 0; r < k; ++r) {
            if (!rows[r].is_array() || rows[r].size() != k) {
                throw ParseError(ctx + ".coefficients: must be a square matrix");
            }
            for (size_t c = 0; c < k; ++c) {
                coeff(r, c) = complex_entry(
                    rows[r][c], ctx + ".coefficients[" + std::to_string(r) +
                                    "][" + std::to_string(c) + "]");
            }
        }
        out.push_back({std::move(coeff), entry["name"].get<std::string>()});
    }
    return out;
}

AlgebraSpec parse_algebra(const json& root) {
    if (!root.contains("algebra") || !root["algebra"].is_string()) {
        throw ParseError("scenario: missing string key \"algebra\"");
    }
    AlgebraSpec spec;
    spec.kind = algebra_kind_from_string(root["algebra"].get<std::string>());

    const json params = root.contains("params") ? root["params"]
                                                : json::object();
    if (!params.is_object()) {
        throw ParseError("scenario: \"params\" must be an object");
    }

    switch (spec.kind) {
        case AlgebraKind::fock: {
            check_keys(params, {"n_max", "kappa1", "kappa2"}, "params");
            if (!params.contains("n_max")) {
                throw ParseError("params: fock requires \"n_max\"");
            }
            spec.n_max =
                static_cast<int>(integer_value(params["n_max"], "params.n_max"));
            if (params.contains("kappa1")) {
                spec.kappa1 = finite_number(params["kappa1"], "params.kappa1");
            }
            if (params.contains("kappa2")) {
                spec.kappa2 = finite_number(params["kappa2"], "params.kappa2");
            }
            break;
        }
        case AlgebraKind::multimode: {
            check_keys(params,
                       {"n_max", "total_cutoff", "bilinears", "signs"},
                       "params");
            if (!params.contains("n_max")) {
                throw ParseError(
                    "params: multimode requires \"n_max\" (array of ints)");
            }
            spec.mode_n_max = int_list(params["n_max"], "params.n_max");
            if (params.contains("total_cutoff")) {
                spec.total_cutoff =
                    integer_value(params["total_cutoff"], "params.total_cutoff");
            }
            if (params.contains("bilinears")) {
                spec.bilinears =
                    parse_bilinears(params["bilinears"], "params.bilinears");
            }
            if (params.contains("signs")) {
                spec.signs = int_list(params["signs"], "params.signs");
            }
            break;
        }
        case AlgebraKind::su2: {
            check_keys(params, {"kappa"}, "params");
            if (!params.contains("kappa")) {
                throw ParseError("params: su2 requires \"kappa\"");
            }
            spec.kappa = half_integer_param(params["kappa"], "params.kappa");
            break;
        }
        case AlgebraKind::su11: {
            check_keys(params, {"kappa", "bound", "truncation"}, "params");
            if (!params.contains("kappa") || !params.contains("bound") ||
                !params.contains("truncation")) {
                throw ParseError(
                    "params: su11 requires \"kappa\", \"bound\", \"truncation\"");
            }
            spec.kappa_real = finite_number(params["kappa"], "params.kappa");
            const std::string bound = params["bound"].is_string()
                                          ? params["bound"].get<std::string>()
                                          : "";
            if (bound == "below") {
                spec.bound = Su11Bound::below;
            } else if (bound == "above") {
                spec.bound = Su11Bound::above;
            } else {
                throw ParseError(
                    "params.bound: expected \"below\" or \"above\"");
            }
            spec.truncation = static_cast<int>(
                integer_value(params["truncation"], "params.truncation"));
            break;
        }
        case AlgebraKind::single_mode_su11: {
            check_keys(params, {"n_max"}, "params");
            if (!params.contains("n_max")) {
                throw ParseError(
                    "params: single_mode_su11 requires \"n_max\"");
            }
            spec.n_max =
                static_cast<int>(integer_value(params["n_max"], "params.n_max"));
            break;
        }
    }
    return spec;
}

} // namespace

OutputSelection OutputSelection::from_names(
    const std::vector<std::string>& names) {
    if (names.empty()) return OutputSelection{};
    OutputSelection sel;
    sel.expectation = sel.variance = sel.covariance = sel.correlation = false;
    sel.commutator_expectation = sel.uncertainty_product = false;
    sel.robertson_bound = sel.spectral_table = false;
    for (const std::string& name : names) {
        if (name == "expectation") sel.expectation = true;
        else if (name == "variance") sel.variance = true;
        else if (name == "covariance") sel.covariance = true;
        else if (name == "correlation") sel.correlation = true;
        else if (name == "commutator_expectation") sel.commutator_expectation = true;
        else if (name == "uncertainty_product") sel.uncertainty_product = true;
        else if (name == "robertson_bound") sel.robertson_bound = true;
        else if (name == "spectral_table") sel.spectral_table = true;
        else {
            throw ParseError(
                "outputs: unknown report field \"" + name +
                "\" (expected expectation, variance, covariance, correlation, "
                "commutator_expectation, uncertainty_product, robertson_bound, "
                "spectral_table)");
        }
    }
    return sel;
}

ScenarioFile parse_scenario_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!root.is_object()) {
        throw ParseError("scenario: top level must be an object");
    }
    check_keys(root, {"algebra", "params", "state", "outputs", "checks", "tol"},
               "scenario");

    ScenarioFile file;
    file.algebra = parse_algebra(root);

    if (!root.contains("state") || !root["state"].is_array() ||
        root["state"].empty()) {
        throw ParseError(
            "scenario: \"state\" must be a non-empty array of "
            "{label, re, im} entries");
    }
    for (size_t i = 0; i < root["state"].size(); ++i) {
        const json& entry = root["state"][i];
        const std::string ctx = "state[" + std::to_string(i) + "]";
        if (!entry.is_object()) throw ParseError(ctx + ": expected an object");
        check_keys(entry, {"label", "re", "im"}, ctx);
        if (!entry.contains("label") || !entry["label"].is_string()) {
            throw ParseError(ctx + ": missing string \"label\"");
        }
        double re = 0.0, im = 0.0;
        if (entry.contains("re")) re = finite_number(entry["re"], ctx + ".re");
        if (entry.contains("im")) im = finite_number(entry["im"], ctx + ".im");
        file.state.push_back(
            {entry["label"].get<std::string>(), Complex(re, im)});
    }

    if (root.contains("outputs")) {
        if (!root["outputs"].is_array()) {
            throw ParseError("scenario: \"outputs\" must be an array");
        }
        std::vector<std::string> names;
        for (const auto& e : root["outputs"]) {
            if (!e.is_string()) {
                throw ParseError("outputs: entries must be strings");
            }
            names.push_back(e.get<std::string>());
        }
        file.outputs = OutputSelection::from_names(names);
    }

    if (root.contains("checks")) {
        if (!root["checks"].is_array()) {
            throw ParseError("scenario: \"checks\" must be an array");
        }
        for (const auto& e : root["checks"]) {
            if (!e.is_string() || e.get<std::string>() != "canonical") {
                throw ParseError(
                    "checks: unknown relation set (expected \"canonical\")");
            }
            file.run_canonical_checks = true;
        }
    }

    if (root.contains("tol")) {
        file.tol = finite_number(root["tol"], "tol");
        if (!(file.tol > 0.0)) {
            throw ParseError("tol: must be > 0");
        }
    }
    return file;
}

ScenarioFile load_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open scenario file \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario_text(buffer.str());
}

} // namespace qgame
