#include "qgame/operator_core.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <sstream>

namespace qgame {

namespace {

using LongComplex = std::complex<long double>;
using MatrixXcld =
    Eigen::Matrix<LongComplex, Eigen::Dynamic, Eigen::Dynamic>;

} // namespace

void require_square(const OperatorMatrix& a, const char* who) {
    if (a.rows() < 1 || a.rows() != a.cols()) {
        std::ostringstream os;
        os << who << ": matrix must be square and non-empty, got " << a.rows()
           << "x" << a.cols();
        throw DimensionError(os.str());
    }
}

void require_finite(const OperatorMatrix& a, const char* who) {
    if (!a.allFinite()) {
        throw StateError(std::string(who) + ": non-finite matrix entries");
    }
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_square(a, "commutator");
    require_square(b, "commutator");
    if (a.rows() != b.rows()) {
        std::ostringstream os;
        os << "commutator: dimension mismatch " << a.rows() << " vs "
           << b.rows();
        throw DimensionError(os.str());
    }
    const MatrixXcld al = a.cast<LongComplex>();
    const MatrixXcld bl = b.cast<LongComplex>();
    const MatrixXcld c = al * bl - bl * al;
    return c.cast<Complex>();
}

double hermiticity_defect(const OperatorMatrix& a) {
    require_square(a, "hermiticity_defect");
    return (a - a.adjoint().eval()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const OperatorMatrix& a, double tol) {
    if (tol < 0) {
        throw Error("is_hermitian: tolerance must be nonnegative");
    }
    return hermiticity_defect(a) <= tol;
}

EigenSystem hermitian_eigensystem(const OperatorMatrix& a, double tol) {
    require_square(a, "hermitian_eigensystem");
    const double defect = hermiticity_defect(a);
    if (defect > tol) {
        std::ostringstream os;
        os << "hermitian_eigensystem: input not Hermitian, max asymmetry "
           << defect << " exceeds tolerance " << tol;
        throw NotHermitianError(os.str());
    }
    Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(a);
    if (solver.info() != Eigen::Success) {
        throw Error("hermitian_eigensystem: eigensolver failed to converge");
    }
    EigenSystem out{solver.eigenvalues(), solver.eigenvectors()};
    // Phase convention: largest-magnitude component real positive.
    for (Eigen::Index j = 0; j < out.vectors.cols(); ++j) {
        Eigen::Index imax = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < out.vectors.rows(); ++i) {
            const double m = std::abs(out.vectors(i, j));
            if (m > best) {
                best = m;
                imax = i;
            }
        }
        const Complex pivot = out.vectors(imax, j);
        if (std::abs(pivot) > 0) {
            out.vectors.col(j) *= std::conj(pivot) / std::abs(pivot);
        }
    }
    require_finite(out.vectors, "hermitian_eigensystem");
    return out;
}

OperatorMatrix embed_mode(const OperatorMatrix& a, int mode,
                          const std::vector<int>& mode_dims) {
    require_square(a, "embed_mode");
    if (mode < 0 || mode >= static_cast<int>(mode_dims.size())) {
        std::ostringstream os;
        os << "embed_mode: mode " << mode << " out of range for "
           << mode_dims.size() << " modes";
        throw DimensionError(os.str());
    }
    for (int d : mode_dims) {
        if (d < 1) {
            throw DimensionError("embed_mode: mode dimensions must be >= 1");
        }
    }
    if (a.rows() != mode_dims[mode]) {
        std::ostringstream os;
        os << "embed_mode: operator dim " << a.rows()
           << " does not match mode dim " << mode_dims[mode];
        throw DimensionError(os.str());
    }

    // Mode 0 slowest-varying: flat index = ((n_0*d_1 + n_1)*d_2 + n_2)...
    long long left = 1;
    long long right = 1;
    for (int i = 0; i < mode; ++i) left *= mode_dims[i];
    for (int i = mode + 1; i < static_cast<int>(mode_dims.size()); ++i)
        right *= mode_dims[i];
    const long long d = mode_dims[mode];
    const long long total = left * d * right;

    OperatorMatrix out = OperatorMatrix::Zero(total, total);
    for (long long l = 0; l < left; ++l) {
        for (long long r = 0; r < d; ++r) {
            for (long long c = 0; c < d; ++c) {
                const Complex v = a(r, c);
                if (v == Complex(0.0, 0.0)) continue;
                const long long row0 = (l * d + r) * right;
                const long long col0 = (l * d + c) * right;
                for (long long k = 0; k < right; ++k) {
                    out(row0 + k, col0 + k) = v;
                }
            }
        }
    }
    return out;
}

double spectral_norm(const OperatorMatrix& a) {
    require_square(a, "spectral_norm");
    if (max_abs(a) == 0.0) return 0.0;
    Eigen::JacobiSVD<OperatorMatrix> svd(a);
    return svd.singularValues()(0);
}

double max_abs(const OperatorMatrix& a) {
    return a.cwiseAbs().maxCoeff();
}

double max_abs_on(const OperatorMatrix& a, const std::vector<int>& indices) {
    double worst = 0.0;
    for (int i : indices) {
        if (i < 0 || i >= a.rows()) {
            throw DimensionError("max_abs_on: index out of range");
        }
        for (int j : indices) {
            worst = std::max(worst, std::abs(a(i, j)));
        }
    }
    return worst;
}

OperatorMatrix identity(int dim) {
    if (dim < 1) throw DimensionError("identity: dim must be >= 1");
    return OperatorMatrix::Identity(dim, dim);
}

} // namespace qgame
