#include "qgame/fock.hpp"

#include <cmath>
#include <sstream>

namespace qgame {

std::vector<int> FockSpace::interior_indices() const {
    std::vector<int> out(n_max);
    for (int i = 0; i < n_max; ++i) out[i] = i;
    return out;
}

GameSpacePtr FockSpace::game_space() const {
    std::vector<std::string> labels(dim());
    std::vector<bool> interior(dim());
    for (int n = 0; n < dim(); ++n) {
        labels[n] = "n=" + std::to_string(n);
        interior[n] = n < n_max;
    }
    std::ostringstream os;
    os << "fock(n_max=" << n_max << ")";
    return std::make_shared<GameSpace>(os.str(), std::move(labels),
                                       std::move(interior));
}

PayoffUnits::PayoffUnits(double k1, double k2) : kappa1(k1), kappa2(k2) {
    if (!(kappa1 > 0.0) || !(kappa2 > 0.0)) {
        throw CoefficientError("PayoffUnits: kappa1, kappa2 must be > 0");
    }
}

LadderPair build_ladder(const FockSpace& space) {
    const int d = space.dim();
    OperatorMatrix up = OperatorMatrix::Zero(d, d);
    for (int n = 0; n + 1 < d; ++n) {
        up(n + 1, n) = std::sqrt(static_cast<double>(n + 1));
    }
    return {up, up.adjoint()};
}

OperatorMatrix build_number(const FockSpace& space) {
    const int d = space.dim();
    OperatorMatrix num = OperatorMatrix::Zero(d, d);
    for (int n = 0; n < d; ++n) {
        num(n, n) = static_cast<double>(n);
    }
    return num;
}

PayoffPair build_payoffs(const FockSpace& space, const PayoffUnits& units) {
    const int d = space.dim();
    OperatorMatrix pi1 = OperatorMatrix::Zero(d, d);
    OperatorMatrix pi2 = OperatorMatrix::Zero(d, d);
    for (int n = 0; n + 1 < d; ++n) {
        // kappa * sqrt((n+1)/2) with a single rounding to double.
        const long double w = sqrtl((n + 1) / 2.0L);
        const double p = static_cast<double>(units.kappa1 * w);
        const double q = static_cast<double>(units.kappa2 * w);
        pi1(n + 1, n) = p;
        pi1(n, n + 1) = p;
        pi2(n + 1, n) = Complex(0.0, q);
        pi2(n, n + 1) = Complex(0.0, -q);
    }
    return {pi1, pi2};
}

LadderPair ladder_from_payoffs(const PayoffPair& payoffs,
                               const PayoffUnits& units) {
    const Complex i(0.0, 1.0);
    const double s = 1.0 / std::sqrt(2.0);
    OperatorMatrix up =
        s * (payoffs.pi1 / units.kappa1 - i * payoffs.pi2 / units.kappa2);
    OperatorMatrix down =
        s * (payoffs.pi1 / units.kappa1 + i * payoffs.pi2 / units.kappa2);
    return {up, down};
}

namespace {

double real_expectation(const OperatorMatrix& op, const StateVector& psi) {
    return std::real(Complex(psi.adjoint() * (op * psi)));
}

} // namespace

UncertaintyResult uncertainty_product(const OperatorMatrix& pi1,
                                      const OperatorMatrix& pi2,
                                      const GameState& state) {
    require_square(pi1, "uncertainty_product");
    require_square(pi2, "uncertainty_product");
    const StateVector& psi = state.amplitudes();
    if (pi1.rows() != psi.size() || pi2.rows() != psi.size()) {
        throw DimensionError(
            "uncertainty_product: operator/state dimension mismatch");
    }
    if (!is_hermitian(pi1, 1e-10) || !is_hermitian(pi2, 1e-10)) {
        throw NotHermitianError(
            "uncertainty_product: payoff operators must be Hermitian");
    }
    const double leak = state.boundary_leak();
    if (leak > kBoundaryLeakTol) {
        std::ostringstream os;
        os << "uncertainty_product: state leaks onto the truncation boundary "
              "(amplitude "
           << leak << "); the uncertainty bound is unreliable there";
        throw TruncationError(os.str());
    }

    const StateVector v1 = pi1 * psi;
    const StateVector v2 = pi2 * psi;
    const double e1 = real_expectation(pi1, psi);
    const double e2 = real_expectation(pi2, psi);
    const double var1 = std::max(0.0, v1.squaredNorm() - e1 * e1);
    const double var2 = std::max(0.0, v2.squaredNorm() - e2 * e2);

    UncertaintyResult out;
    out.delta1 = std::sqrt(var1);
    out.delta2 = std::sqrt(var2);
    out.product = out.delta1 * out.delta2;
    // <[pi1,pi2]> = 2i Im <pi1 psi | pi2 psi>
    const Complex cross = Complex(v1.adjoint() * v2);
    out.bound = std::abs(cross.imag());
    return out;
}

GameState decay_game_state(
    const FockSpace& space,
    const std::vector<std::pair<int, Complex>>& weights) {
    if (weights.empty()) {
        throw StateError("decay_game_state: empty weight list");
    }
    StateVector amps = StateVector::Zero(space.dim());
    for (const auto& [level, amplitude] : weights) {
        if (level < 0 || level >= space.dim()) {
            std::ostringstream os;
            os << "decay_game_state: level " << level
               << " outside Fock space of dim " << space.dim();
            throw DimensionError(os.str());
        }
        amps[level] += amplitude;
    }
    const double norm = amps.norm();
    if (norm == 0.0) {
        throw StateError("decay_game_state: all weights cancel to zero");
    }
    amps /= norm;
    return GameState(space.game_space(), std::move(amps));
}

} // namespace qgame
