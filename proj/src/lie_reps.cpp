#include "qgame/lie_reps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace qgame {

namespace {

std::string format_mu(double mu) {
    const double twice = 2.0 * mu;
    if (std::abs(twice - std::round(twice)) <= 1e-9) {
        return HalfInteger::from_double(mu).str();
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", mu);
    return buf;
}

/// Hermitian pair (pi1, pi2) from a raising matrix with real coefficients
/// c[m] at (m+1, m): pi1 = (p+ + p-)/2, pi2 = (p+ - p-)/(2i).
void ladder_to_hermitian(const std::vector<double>& c, OperatorMatrix& pi1,
                         OperatorMatrix& pi2) {
    const int d = static_cast<int>(c.size()) + 1;
    pi1 = OperatorMatrix::Zero(d, d);
    pi2 = OperatorMatrix::Zero(d, d);
    for (int m = 0; m + 1 < d; ++m) {
        const double half = 0.5 * c[m];
        pi1(m + 1, m) = half;
        pi1(m, m + 1) = half;
        pi2(m + 1, m) = Complex(0.0, -half);
        pi2(m, m + 1) = Complex(0.0, half);
    }
}

const char* kSchwingerPauliMsg =
    "schwinger_blocks: generators must carry the three Pauli/2 coefficient "
    "matrices";

} // namespace

GameSpacePtr Su2Irrep::game_space() const {
    const int d = dim();
    std::vector<std::string> labels(d);
    std::vector<bool> interior(d, true); // finite irreps are exact
    for (int m = 0; m < d; ++m) {
        const HalfInteger mu = HalfInteger::from_twice(-kappa.twice() + 2 * m);
        labels[m] = "kappa=" + kappa.str() + ",mu=" + mu.str();
    }
    return std::make_shared<GameSpace>("su2(kappa=" + kappa.str() + ")",
                                       std::move(labels), std::move(interior));
}

Su2Irrep build_su2_irrep(HalfInteger kappa) {
    if (kappa.twice() < 0) {
        throw RepresentationError("su(2) irrep: kappa must be >= 0, got " +
                                  kappa.str());
    }
    const long t = kappa.twice();
    const int d = static_cast<int>(t) + 1;

    Su2Irrep rep;
    rep.kappa = kappa;
    rep.pi3 = OperatorMatrix::Zero(d, d);
    for (int m = 0; m < d; ++m) {
        rep.pi3(m, m) = 0.5 * static_cast<double>(-t + 2 * m); // mu exact
    }
    // ladder coefficient sqrt((kappa-mu)(kappa+mu+1)) = sqrt((t-m)(m+1))
    std::vector<double> c(d - 1);
    for (int m = 0; m + 1 < d; ++m) {
        c[m] = std::sqrt(static_cast<double>((t - m) * (m + 1)));
    }
    ladder_to_hermitian(c, rep.pi1, rep.pi2);
    return rep;
}

OperatorMatrix su2_casimir(const Su2Irrep& rep) {
    return rep.pi1 * rep.pi1 + rep.pi2 * rep.pi2 + rep.pi3 * rep.pi3;
}

HalfInteger round_to_kappa(long n1, long n2) {
    if (n1 < 0 || n2 < 0) {
        throw DimensionError("round_to_kappa: counts must be >= 0");
    }
    return HalfInteger::from_twice(n1 + n2);
}

std::vector<SchwingerBlock> schwinger_blocks(
    const MultiGameSpace& space,
    const std::vector<BilinearPayoff>& generators) {
    if (space.modes() != 2) {
        throw DimensionError("schwinger_blocks: space must have K=2 modes");
    }
    if (generators.size() != 3) {
        throw CoefficientError(kSchwingerPauliMsg);
    }
    const Complex i(0.0, 1.0);
    OperatorMatrix pauli_half[3];
    pauli_half[0] = OperatorMatrix{{0.0, 0.5}, {0.5, 0.0}};
    pauli_half[1] = OperatorMatrix{{0.0, -0.5 * i}, {0.5 * i, 0.0}};
    pauli_half[2] = OperatorMatrix{{0.5, 0.0}, {0.0, -0.5}};
    for (int g = 0; g < 3; ++g) {
        const auto& coeff = generators[g].coefficients;
        if (coeff.rows() != 2 || coeff.cols() != 2 ||
            max_abs(coeff - pauli_half[g]) > 1e-12) {
            throw CoefficientError(kSchwingerPauliMsg);
        }
    }

    const MultimodeOperators ops = build_multimode(space);
    OperatorMatrix realized[3];
    for (int g = 0; g < 3; ++g) {
        realized[g] =
            realize_bilinear(ops, generators[g], BilinearOrdering::normal);
    }

    // Sectors with total <= min(n_max) never push any mode past its cap,
    // so their blocks reproduce the exact irreps.
    const long long exact_total =
        *std::min_element(space.n_max().begin(), space.n_max().end());

    std::vector<SchwingerBlock> blocks;
    for (long long total = 0; total <= exact_total; ++total) {
        SchwingerBlock block;
        block.kappa = HalfInteger::from_twice(total);
        block.indices = number_sector(space, total);
        const Su2Irrep direct = build_su2_irrep(block.kappa);
        const int sd = static_cast<int>(block.indices.size());

        const OperatorMatrix* direct_gen[3] = {&direct.pi1, &direct.pi2,
                                               &direct.pi3};
        double residual = 0.0;
        for (int g = 0; g < 3; ++g) {
            OperatorMatrix restricted(sd, sd);
            for (int r = 0; r < sd; ++r) {
                for (int col = 0; col < sd; ++col) {
                    restricted(r, col) =
                        realized[g](block.indices[r], block.indices[col]);
                }
            }
            residual =
                std::max(residual, max_abs(restricted - *direct_gen[g]));
        }
        block.residual = residual;
        blocks.push_back(std::move(block));
    }
    return blocks;
}

std::vector<std::pair<HalfInteger, double>> classical_limit_profile(
    const std::vector<HalfInteger>& kappas) {
    std::vector<std::pair<HalfInteger, double>> out;
    out.reserve(kappas.size());
    for (const HalfInteger& kappa : kappas) {
        if (kappa.twice() < 1) {
            throw RepresentationError(
                "classical_limit_profile: kappa must be >= 1/2 (scaling is "
                "undefined on the singlet)");
        }
        const Su2Irrep rep = build_su2_irrep(kappa);
        const double k = kappa.value();
        const double scale = 1.0 / std::sqrt(k * (k + 1.0));
        const OperatorMatrix s1 = scale * rep.pi1;
        const OperatorMatrix s2 = scale * rep.pi2;
        out.emplace_back(kappa, spectral_norm(commutator(s1, s2)));
    }
    return out;
}

std::vector<int> Su11Irrep::interior_indices() const {
    std::vector<int> out(truncation_dim - 1);
    for (int i = 0; i + 1 < truncation_dim; ++i) out[i] = i;
    return out;
}

GameSpacePtr Su11Irrep::game_space() const {
    std::vector<std::string> labels(truncation_dim);
    std::vector<bool> interior(truncation_dim);
    for (int m = 0; m < truncation_dim; ++m) {
        labels[m] = "mu=" + format_mu(std::real(pi3(m, m)));
        interior[m] = m + 1 < truncation_dim;
    }
    std::ostringstream os;
    os << "su11(kappa=" << format_mu(kappa) << ", bound="
       << (bound == Su11Bound::below ? "below" : "above")
       << ", truncation=" << truncation_dim << ")";
    return std::make_shared<GameSpace>(os.str(), std::move(labels),
                                       std::move(interior));
}

Su11Irrep build_su11_irrep(double kappa, Su11Bound bound, int truncation_dim) {
    if (truncation_dim < 2) {
        throw DimensionError("su(1,1) irrep: truncation_dim must be >= 2");
    }
    if (!std::isfinite(kappa)) {
        throw RepresentationError("su(1,1) irrep: kappa must be finite");
    }
    // Lowest weight mu0 = kappa + 1. The recursion fixed by
    // [p+, p-] = -2 pi3 and p-|mu0> = 0 gives
    //   c_m^2 = c_{m-1}^2 + 2 (mu0 + m)  =>  c_m^2 = (m+1)(2 mu0 + m),
    // so unitarity (all c_m^2 > 0) needs mu0 > 0, i.e. kappa > -1.
    const double mu0 = kappa + 1.0;
    if (!(mu0 > 0.0)) {
        std::ostringstream os;
        os << "su(1,1) irrep: kappa = " << kappa
           << " is not unitarizable on the discrete series (needs kappa > -1)";
        throw RepresentationError(os.str());
    }

    Su11Irrep rep;
    rep.kappa = kappa;
    rep.bound = bound;
    rep.truncation_dim = truncation_dim;

    const int d = truncation_dim;
    rep.pi3 = OperatorMatrix::Zero(d, d);
    std::vector<double> c(d - 1);
    for (int m = 0; m < d; ++m) {
        rep.pi3(m, m) = mu0 + static_cast<double>(m);
    }
    for (int m = 0; m + 1 < d; ++m) {
        c[m] = std::sqrt((m + 1.0) * (2.0 * mu0 + m));
    }
    ladder_to_hermitian(c, rep.pi1, rep.pi2);

    if (bound == Su11Bound::above) {
        rep.pi3 = -rep.pi3;
        rep.pi2 = -rep.pi2;
        rep.mu0 = -mu0;
    } else {
        rep.mu0 = mu0;
    }
    return rep;
}

OperatorMatrix su11_casimir(const Su11Irrep& rep) {
    return -(rep.pi1 * rep.pi1) - rep.pi2 * rep.pi2 + rep.pi3 * rep.pi3;
}

SingleModeSu11 single_mode_su11(const FockSpace& space) {
    const int d = space.dim();
    if (d < 4) {
        throw DimensionError(
            "single_mode_su11: need dim >= 4 for the quadratic ladders");
    }

    SingleModeSu11 out;
    // k+ = a+^2/2 has entries sqrt((n+1)(n+2))/2 at (n+2, n);
    // k1 = (k+ + k-)/2, k2 = (k+ - k-)/(2i), k3 = (2N+1)/4.
    out.k1 = OperatorMatrix::Zero(d, d);
    out.k2 = OperatorMatrix::Zero(d, d);
    out.k3 = OperatorMatrix::Zero(d, d);
    for (int n = 0; n + 2 < d; ++n) {
        const double half = 0.25 * std::sqrt((n + 1.0) * (n + 2.0));
        out.k1(n + 2, n) = half;
        out.k1(n, n + 2) = half;
        out.k2(n + 2, n) = Complex(0.0, -half);
        out.k2(n, n + 2) = Complex(0.0, half);
    }
    for (int n = 0; n < d; ++n) {
        out.k3(n, n) = 0.25 * (2.0 * n + 1.0);
    }

    // Fock labels, but with the top two levels outside the interior.
    std::vector<std::string> labels(d);
    std::vector<bool> interior(d);
    for (int n = 0; n < d; ++n) {
        labels[n] = "n=" + std::to_string(n);
        interior[n] = n + 2 < d;
    }
    std::ostringstream os;
    os << "single_mode_su11(n_max=" << space.n_max << ")";
    out.space = std::make_shared<GameSpace>(os.str(), std::move(labels),
                                            std::move(interior));
    return out;
}

} // namespace qgame
