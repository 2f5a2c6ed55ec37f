#ifndef QGAME_MULTIMODE_HPP
#define QGAME_MULTIMODE_HPP

#include <optional>
#include <string>
#include <vector>

#include "qgame/game_space.hpp"
#include "qgame/operator_core.hpp"
#include "qgame/types.hpp"

namespace qgame {

/// Product space for K sub-games with per-mode truncation. The basis is
/// the full set of occupation tuples (n_1, ..., n_K), ordered
/// lexicographically with mode 0 slowest-varying. total_cutoff, when set,
/// only narrows the interior metadata (which total-number sectors are
/// treated as exactly represented); it never changes the basis, so
/// dim == prod(n_max_i + 1) always holds.
class MultiGameSpace {
public:
    explicit MultiGameSpace(std::vector<int> n_max,
                            std::optional<long long> total_cutoff = {});

    int modes() const { return static_cast<int>(n_max_.size()); }
    const std::vector<int>& n_max() const { return n_max_; }
    std::optional<long long> total_cutoff() const { return total_cutoff_; }
    long long dim() const { return dim_; }
    std::vector<int> mode_dims() const;

    std::vector<int> tuple_of(long long index) const;
    long long index_of(const std::vector<int>& tuple) const;
    long long total_of(long long index) const;
    long long max_total() const;

    /// Largest total-number sector that is exactly represented: every
    /// bilinear ladder move inside it stays below all per-mode caps.
    long long interior_total_max() const;

    std::vector<int> interior_indices() const;
    GameSpacePtr game_space() const;

private:
    std::vector<int> n_max_;
    std::optional<long long> total_cutoff_;
    long long dim_ = 0;
};

/// Per-mode ladder and counting operators on the product space.
struct MultimodeOperators {
    std::vector<OperatorMatrix> raising;
    std::vector<OperatorMatrix> lowering;
    std::vector<OperatorMatrix> number;
};

/// Hermitian K x K coefficient matrix defining one player's bilinear
/// payoff P = sum_ab P_ab a-_a a+_b.
struct BilinearPayoff {
    OperatorMatrix coefficients;
    std::string name;
};

/// Index ordering of the two ladder factors inside a bilinear payoff.
/// The two differ by trace(P) times the identity on interior sectors.
enum class BilinearOrdering {
    annihilator_first, // sum_ab P_ab a-_a a+_b
    normal,            // sum_ab P_ab a+_a a-_b
};

MultimodeOperators build_multimode(const MultiGameSpace& space);

OperatorMatrix realize_bilinear(
    const MultiGameSpace& space, const BilinearPayoff& payoff,
    BilinearOrdering ordering = BilinearOrdering::annihilator_first);

OperatorMatrix realize_bilinear(
    const MultimodeOperators& ops, const BilinearPayoff& payoff,
    BilinearOrdering ordering = BilinearOrdering::annihilator_first);

/// sum_i N_i
OperatorMatrix total_number(const MultimodeOperators& ops);

/// sum_i signs_i N_i with signs_i in {+1, -1}; the grading that makes
/// negatively-counted move types explicit.
OperatorMatrix signed_number(const MultiGameSpace& space,
                             const std::vector<int>& signs);

/// K^2 - 1 < 2K: true exactly for K = 1 and K = 2, where the payoff
/// algebra is forced to be non-commutative.
bool noncommutativity_criterion(int num_subgames);

/// Basis indices of all tuples with sum n_i == total, in basis order.
std::vector<int> number_sector(const MultiGameSpace& space, long long total);

void require_hermitian_coefficients(const BilinearPayoff& payoff,
                                    int expected_modes);

} // namespace qgame

#endif
