#ifndef QGAME_ALGEBRA_FACTORY_HPP
#define QGAME_ALGEBRA_FACTORY_HPP

#include <optional>
#include <string>
#include <vector>

#include "qgame/half_integer.hpp"
#include "qgame/lie_reps.hpp"
#include "qgame/multimode.hpp"
#include "qgame/scenario.hpp"

namespace qgame {

enum class AlgebraKind {
    fock,
    multimode,
    su2,
    su11,
    single_mode_su11,
};

AlgebraKind algebra_kind_from_string(const std::string& name);
std::string algebra_kind_to_string(AlgebraKind kind);

/// Validated parameters for one constructed payoff algebra. Only the
/// fields relevant to `kind` are read.
struct AlgebraSpec {
    AlgebraKind kind = AlgebraKind::fock;

    // fock / single_mode_su11
    int n_max = 8;
    double kappa1 = 1.0;
    double kappa2 = 1.0;

    // multimode
    std::vector<int> mode_n_max;
    std::optional<long long> total_cutoff;
    std::vector<BilinearPayoff> bilinears;
    std::optional<std::vector<int>> signs;

    // su2
    HalfInteger kappa = HalfInteger::from_twice(1);

    // su11
    double kappa_real = 0.0;
    Su11Bound bound = Su11Bound::below;
    int truncation = 8;
};

/// A constructed algebra ready for verification, spectra and measurement:
/// the space, the Hermitian operators a scenario can measure, the wider
/// operator set its canonical relation table references (ladder operators
/// included), and the interior on which the relations are asserted.
struct AlgebraBundle {
    std::string description;
    GameSpacePtr space;
    std::vector<NamedOperator> measurable;
    std::vector<NamedOperator> relation_operators;
    std::vector<CommutatorRelation> canonical;
    std::vector<int> interior;
    /// name -> trace(P) shift for bilinears realized annihilator-first.
    std::vector<std::pair<std::string, double>> normal_order_shifts;
};

AlgebraBundle make_algebra(const AlgebraSpec& spec);

/// Measurable operator by name, for spectrum queries.
const OperatorMatrix& find_measurable(const AlgebraBundle& bundle,
                                      const std::string& name);

} // namespace qgame

#endif
