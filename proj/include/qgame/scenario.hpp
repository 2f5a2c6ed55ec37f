#ifndef QGAME_SCENARIO_HPP
#define QGAME_SCENARIO_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgame/game_space.hpp"
#include "qgame/operator_core.hpp"
#include "qgame/types.hpp"

namespace qgame {

using NamedOperator = std::pair<std::string, OperatorMatrix>;

/// Per-operator measurement statistics.
struct OperatorStats {
    std::string name;
    double expectation = 0.0;
    double variance = 0.0;
    /// (eigenvalue, probability) rows of the operator's spectral
    /// distribution in the state, ascending by eigenvalue. Filled on
    /// request; this is the only sampling-flavored output (no collapse
    /// protocol is simulated).
    std::optional<std::vector<std::pair<double, double>>> spectral_table;
    /// For bilinear payoffs realized in annihilator-first order: trace of
    /// the coefficient matrix, the identity shift separating that order
    /// from the normal-ordered form on interior sectors.
    std::optional<double> normal_order_shift;
};

/// Pairwise statistics for two payoff operators. The symmetrized product
/// fixes the real covariance; the antisymmetric part is reported
/// separately as the commutator expectation (imaginary part).
struct PairStats {
    std::string a;
    std::string b;
    double covariance = 0.0;
    std::optional<double> correlation; // null when a marginal has zero spread
    double commutator_expectation = 0.0; // Im <[A,B]>
    double uncertainty_product = 0.0;    // dA * dB
    double robertson_bound = 0.0;        // |<[A,B]>| / 2
};

struct ReportContext {
    std::string space;
    int dim = 0;
    double tolerance = 0.0;
    double boundary_leak = 0.0;
    bool truncated_space = false;
};

struct MeasurementReport {
    ReportContext context;
    std::vector<OperatorStats> operators;
    std::vector<PairStats> pairs;
};

/// One commutator identity [a, b] = sum_k coeff_k * op_k, where the
/// operator name "I" denotes the identity.
struct RelationTerm {
    Complex coeff;
    std::string name;
};

struct CommutatorRelation {
    std::string a;
    std::string b;
    std::vector<RelationTerm> rhs;
    std::string text;
};

struct RelationResult {
    std::string text;
    double residual = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::vector<RelationResult> relations;
    double worst = 0.0;
    double tol = 0.0;
    bool all_pass = true;
};

/// Normalized state from (label, amplitude) pairs; duplicate labels are
/// summed before normalization.
GameState prepare_state(
    const GameSpacePtr& space,
    const std::vector<std::pair<std::string, Complex>>& amplitudes);

GameState state_from_vector(const GameSpacePtr& space, StateVector raw);

/// Expectations, variances and all pairwise statistics of the named
/// Hermitian operators in the given state.
MeasurementReport measure(const GameState& state,
                          const std::vector<NamedOperator>& operators,
                          bool with_spectral_tables = false);

/// Checks each relation's residual max|[A,B] - rhs| restricted to the
/// interior rows and columns.
VerificationReport verify_algebra(const std::vector<NamedOperator>& operators,
                                  const std::vector<CommutatorRelation>& relations,
                                  const std::vector<int>& interior,
                                  double tol);

} // namespace qgame

#endif
