#ifndef QGAME_TEST_SUPPORT_HPP
#define QGAME_TEST_SUPPORT_HPP

#include <complex>
#include <random>

#include "qgame/types.hpp"

namespace qgame::test {

/// Plain-loop matrix product, independent of the Eigen paths the library
/// uses; the brute-force oracle for commutator and expectation checks.
inline OperatorMatrix slow_multiply(const OperatorMatrix& a,
                                    const OperatorMatrix& b) {
    const int n = static_cast<int>(a.rows());
    OperatorMatrix out = OperatorMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Complex acc(0.0, 0.0);
            for (int k = 0; k < n; ++k) acc += a(i, k) * b(k, j);
            out(i, j) = acc;
        }
    }
    return out;
}

inline OperatorMatrix slow_commutator(const OperatorMatrix& a,
                                      const OperatorMatrix& b) {
    return slow_multiply(a, b) - slow_multiply(b, a);
}

inline Complex slow_expectation(const OperatorMatrix& op,
                                const StateVector& psi) {
    const int n = static_cast<int>(psi.size());
    Complex acc(0.0, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            acc += std::conj(psi[i]) * op(i, j) * psi[j];
        }
    }
    return acc;
}

inline OperatorMatrix random_matrix(int dim, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    OperatorMatrix out(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            out(i, j) = Complex(dist(rng), dist(rng));
        }
    }
    return out;
}

inline OperatorMatrix random_hermitian(int dim, std::mt19937_64& rng) {
    const OperatorMatrix raw = random_matrix(dim, rng);
    return 0.5 * (raw + raw.adjoint().eval());
}

inline StateVector random_state(int dim, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    StateVector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = Complex(dist(rng), dist(rng));
    v /= v.norm();
    return v;
}

} // namespace qgame::test

#endif
