#ifndef QGAME_OPERATOR_CORE_HPP
#define QGAME_OPERATOR_CORE_HPP

#include <vector>

#include "qgame/errors.hpp"
#include "qgame/types.hpp"

namespace qgame {

/// Real spectrum of a Hermitian matrix with an orthonormal eigenbasis.
/// Eigenvalues ascend; column i of `vectors` pairs with `values[i]`.
/// Each eigenvector's phase is fixed so its largest-magnitude component
/// is real positive, which makes golden outputs deterministic.
struct EigenSystem {
    RealVector values;
    OperatorMatrix vectors;
};

/// ab - ba. Products are accumulated in extended precision: commutator
/// entries are small differences of large products, and plain double
/// accumulation loses the cancellation digits the algebra checks need.
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// max |a[i][j] - conj(a[j][i])| <= tol
bool is_hermitian(const OperatorMatrix& a, double tol);

/// Largest Hermiticity defect max |a[i][j] - conj(a[j][i])|.
double hermiticity_defect(const OperatorMatrix& a);

EigenSystem hermitian_eigensystem(const OperatorMatrix& a, double tol = kDecompositionTol);

/// I (x) ... (x) a (x) ... (x) I with `a` in slot `mode`. Basis ordering is
/// lexicographic in occupation tuples with mode 0 slowest-varying, so the
/// flat index of (n_0, ..., n_{K-1}) is the mixed-radix number with digits
/// n_i and radices mode_dims[i].
OperatorMatrix embed_mode(const OperatorMatrix& a, int mode,
                          const std::vector<int>& mode_dims);

/// Largest singular value; equals max |eigenvalue| for Hermitian input.
double spectral_norm(const OperatorMatrix& a);

/// max |entry|
double max_abs(const OperatorMatrix& a);

/// max |entry| over the given rows-and-columns restriction. Used for all
/// interior-subspace residual checks.
double max_abs_on(const OperatorMatrix& a, const std::vector<int>& indices);

OperatorMatrix identity(int dim);

void require_square(const OperatorMatrix& a, const char* who);
void require_finite(const OperatorMatrix& a, const char* who);

} // namespace qgame

#endif
