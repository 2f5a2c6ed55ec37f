#ifndef QGAME_SCENARIO_FILE_HPP
#define QGAME_SCENARIO_FILE_HPP

#include <string>
#include <utility>
#include <vector>

#include "qgame/algebra_factory.hpp"
#include "qgame/types.hpp"

namespace qgame {

/// Which report fields a scenario asked for. Defaults to everything
/// except the spectral tables.
struct OutputSelection {
    bool expectation = true;
    bool variance = true;
    bool covariance = true;
    bool correlation = true;
    bool commutator_expectation = true;
    bool uncertainty_product = true;
    bool robertson_bound = true;
    bool spectral_table = false;

    static OutputSelection from_names(const std::vector<std::string>& names);
};

/// Parsed scenario document: algebra parameters, the prepared state,
/// requested outputs and checks. Parsing is strict: unknown keys anywhere
/// are rejected, all numbers must be finite.
struct ScenarioFile {
    AlgebraSpec algebra;
    std::vector<std::pair<std::string, Complex>> state;
    OutputSelection outputs;
    bool run_canonical_checks = false;
    double tol = kAlgebraTol;
};

ScenarioFile parse_scenario_text(const std::string& text);
ScenarioFile load_scenario_file(const std::string& path);

} // namespace qgame

#endif
