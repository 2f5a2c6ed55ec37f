#ifndef QGAME_LIE_REPS_HPP
#define QGAME_LIE_REPS_HPP

#include <vector>

#include "qgame/fock.hpp"
#include "qgame/game_space.hpp"
#include "qgame/half_integer.hpp"
#include "qgame/multimode.hpp"
#include "qgame/operator_core.hpp"

namespace qgame {

/// Spin-kappa irreducible payoff triple with
///   [pi1,pi2] = i pi3,  [pi2,pi3] = i pi1,  [pi3,pi1] = i pi2.
/// Basis is |kappa,mu> with mu ascending from -kappa to kappa, pi3
/// diagonal, and real nonnegative ladder coefficients
/// sqrt((kappa-mu)(kappa+mu+1)) (Condon-Shortley phases).
struct Su2Irrep {
    HalfInteger kappa;
    OperatorMatrix pi1;
    OperatorMatrix pi2;
    OperatorMatrix pi3;

    int dim() const { return static_cast<int>(kappa.twice()) + 1; }
    GameSpacePtr game_space() const;
};

enum class Su11Bound { below, above };

/// Discrete-series su(1,1) payoff triple with
///   [pi1,pi2] = -i pi3,  [pi2,pi3] = i pi1,  [pi3,pi1] = i pi2,
/// truncated to `truncation_dim` levels. For bound below the pi3 spectrum
/// starts at mu0 = kappa + 1 and steps up by one; bound above is the
/// mirror (pi3 -> -pi3, pi2 -> -pi2). The Casimir -pi1^2 - pi2^2 + pi3^2
/// equals kappa(kappa+1) I on the interior (all but the last level).
struct Su11Irrep {
    double kappa = 0.0;
    Su11Bound bound = Su11Bound::below;
    int truncation_dim = 2;
    double mu0 = 1.0;
    OperatorMatrix pi1;
    OperatorMatrix pi2;
    OperatorMatrix pi3;

    int dim() const { return truncation_dim; }
    std::vector<int> interior_indices() const;
    GameSpacePtr game_space() const;
};

/// Single-mode bilinear su(1,1) realization k+ = a+^2/2, k- = a-^2/2,
/// k3 = (2N+1)/4 on a Fock space; relations hold on all but the top two
/// levels (quadratic ladders leak two levels into the boundary).
struct SingleModeSu11 {
    OperatorMatrix k1;
    OperatorMatrix k2;
    OperatorMatrix k3;
    GameSpacePtr space;
};

/// One irreducible block of the two-mode Schwinger decomposition: the
/// total-number sector carrying spin kappa, with the worst deviation of
/// the restricted generators from build_su2_irrep(kappa).
struct SchwingerBlock {
    HalfInteger kappa;
    std::vector<int> indices;
    double residual = 0.0;
};

Su2Irrep build_su2_irrep(HalfInteger kappa);

/// pi1^2 + pi2^2 + pi3^2 = kappa(kappa+1) I
OperatorMatrix su2_casimir(const Su2Irrep& rep);

/// kappa = (n1 + n2) / 2
HalfInteger round_to_kappa(long n1, long n2);

/// Splits the K=2 product space into total-number sectors and matches
/// each exactly-represented sector against the direct spin-kappa irrep.
/// `generators` must be the three bilinear payoffs with Pauli/2
/// coefficient matrices, realized here in normal-ordered form.
std::vector<SchwingerBlock> schwinger_blocks(
    const MultiGameSpace& space, const std::vector<BilinearPayoff>& generators);

/// For each kappa >= 1/2: spectral_norm([pi1,pi2] / (kappa(kappa+1)))
/// after scaling pi1 and pi2 by 1/sqrt(kappa(kappa+1)); equals
/// 1/(kappa+1), strictly decreasing towards classical commutativity.
std::vector<std::pair<HalfInteger, double>> classical_limit_profile(
    const std::vector<HalfInteger>& kappas);

Su11Irrep build_su11_irrep(double kappa, Su11Bound bound, int truncation_dim);

/// -pi1^2 - pi2^2 + pi3^2 (indefinite metric; both signs matter).
OperatorMatrix su11_casimir(const Su11Irrep& rep);

SingleModeSu11 single_mode_su11(const FockSpace& space);

} // namespace qgame

#endif
