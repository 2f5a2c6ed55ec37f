#ifndef QGAME_FOCK_HPP
#define QGAME_FOCK_HPP

#include <utility>
#include <vector>

#include "qgame/game_space.hpp"
#include "qgame/operator_core.hpp"
#include "qgame/types.hpp"

namespace qgame {

/// Round-number basis |0> ... |n_max> of the minimal arbiter, truncated at
/// n_max. The interior subspace (levels below n_max) is where the
/// untruncated ladder algebra holds exactly; every algebraic assertion in
/// this module is made there, and the truncation defect is confined to the
/// top level rather than hidden.
struct FockSpace {
    int n_max = 1;

    explicit FockSpace(int n_max_in) : n_max(n_max_in) {
        if (n_max < 1) {
            throw DimensionError("FockSpace: n_max must be >= 1");
        }
    }

    int dim() const { return n_max + 1; }
    int interior_dim() const { return n_max; }

    std::vector<int> interior_indices() const;
    GameSpacePtr game_space() const;
};

/// Units of payoff for the two players, kappa_i > 0.
struct PayoffUnits {
    double kappa1 = 1.0;
    double kappa2 = 1.0;

    PayoffUnits() = default;
    PayoffUnits(double k1, double k2);
};

struct LadderPair {
    OperatorMatrix raising;  // a_plus[n+1][n] = sqrt(n+1)
    OperatorMatrix lowering; // a_minus = a_plus^dagger
};

struct PayoffPair {
    OperatorMatrix pi1; // kappa1 (a+ + a-) / sqrt(2)
    OperatorMatrix pi2; // i kappa2 (a+ - a-) / sqrt(2)
};

struct UncertaintyResult {
    double delta1 = 0.0;
    double delta2 = 0.0;
    double product = 0.0;
    double bound = 0.0; // |<[pi1,pi2]>| / 2
};

LadderPair build_ladder(const FockSpace& space);

/// diag(0, 1, ..., n_max); equals a_plus * a_minus and satisfies
/// [N, a_plus] = a_plus on the interior.
OperatorMatrix build_number(const FockSpace& space);

/// Hermitian payoff pair with [pi1, pi2] = i kappa1 kappa2 I on the
/// interior. Entries are rounded once from extended precision so the
/// commutator identity survives at the 1e-12 scale.
PayoffPair build_payoffs(const FockSpace& space, const PayoffUnits& units);

/// Inverse of build_payoffs: recovers the ladder pair from the payoffs,
/// a_plus = (pi1/kappa1 - i pi2/kappa2) / sqrt(2).
LadderPair ladder_from_payoffs(const PayoffPair& payoffs,
                               const PayoffUnits& units);

/// Robertson uncertainty data for a state supported on the interior.
/// Throws StateError for unnormalized states and TruncationError when the
/// top-level amplitude exceeds the boundary-leak threshold (the bound is
/// meaningless once truncation bites).
UncertaintyResult uncertainty_product(const OperatorMatrix& pi1,
                                      const OperatorMatrix& pi2,
                                      const GameState& state);

/// Normalized superposition over round-number eigenstates; duplicate
/// levels are summed before normalization.
GameState decay_game_state(
    const FockSpace& space,
    const std::vector<std::pair<int, Complex>>& weights);

} // namespace qgame

#endif
