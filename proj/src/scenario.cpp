#include "qgame/scenario.hpp"

#include <cmath>
#include <sstream>

namespace qgame {

GameState prepare_state(
    const GameSpacePtr& space,
    const std::vector<std::pair<std::string, Complex>>& amplitudes) {
    if (!space) throw StateError("prepare_state: null space");
    if (amplitudes.empty()) {
        throw StateError("prepare_state: empty amplitude list");
    }
    StateVector amps = StateVector::Zero(space->dim());
    for (const auto& [label, amplitude] : amplitudes) {
        amps[space->require_label(label)] += amplitude;
    }
    return state_from_vector(space, std::move(amps));
}

GameState state_from_vector(const GameSpacePtr& space, StateVector raw) {
    if (!raw.allFinite()) {
        throw StateError("state amplitudes must be finite");
    }
    const double norm = raw.norm();
    if (norm == 0.0) {
        throw StateError("state amplitudes sum to the zero vector");
    }
    raw /= norm;
    return GameState(space, std::move(raw));
}

namespace {

void require_measurable(const NamedOperator& op, int dim) {
    if (op.second.rows() != dim || op.second.cols() != dim) {
        std::ostringstream os;
        os << "measure: operator \"" << op.first << "\" is "
           << op.second.rows() << "x" << op.second.cols()
           << " but the state lives in dim " << dim;
        throw DimensionError(os.str());
    }
    const double defect = hermiticity_defect(op.second);
    if (defect > 1e-10) {
        std::ostringstream os;
        os << "measure: operator \"" << op.first
           << "\" is not Hermitian (defect " << defect << ")";
        throw NotHermitianError(os.str());
    }
}

} // namespace

MeasurementReport measure(const GameState& state,
                          const std::vector<NamedOperator>& operators,
                          bool with_spectral_tables) {
    const StateVector& psi = state.amplitudes();
    const int d = state.dim();

    MeasurementReport report;
    report.context.space = state.space().description();
    report.context.dim = d;
    report.context.tolerance = kAlgebraTol;
    report.context.boundary_leak = state.boundary_leak();
    report.context.truncated_space = state.space().truncated();

    std::vector<StateVector> images;
    images.reserve(operators.size());
    std::vector<double> expectations(operators.size());
    std::vector<double> spreads(operators.size());

    for (size_t i = 0; i < operators.size(); ++i) {
        require_measurable(operators[i], d);
        const OperatorMatrix& op = operators[i].second;
        const StateVector image = op * psi;
        const Complex raw = Complex(psi.adjoint() * image);
        if (std::abs(raw.imag()) > 1e-10) {
            std::ostringstream os;
            os << "measure: expectation of \"" << operators[i].first
               << "\" has imaginary residual " << raw.imag();
            throw NotHermitianError(os.str());
        }
        OperatorStats stats;
        stats.name = operators[i].first;
        stats.expectation = raw.real();
        double variance = image.squaredNorm() - raw.real() * raw.real();
        if (variance < 0.0 && variance > -1e-12) variance = 0.0;
        stats.variance = std::max(variance, 0.0);

        if (with_spectral_tables) {
            const EigenSystem eig = hermitian_eigensystem(op, 1e-10);
            std::vector<std::pair<double, double>> table(d);
            for (int k = 0; k < d; ++k) {
                const Complex overlap = Complex(eig.vectors.col(k).adjoint() * psi);
                table[k] = {eig.values[k], std::norm(overlap)};
            }
            stats.spectral_table = std::move(table);
        }

        expectations[i] = stats.expectation;
        spreads[i] = std::sqrt(stats.variance);
        images.push_back(image);
        report.operators.push_back(std::move(stats));
    }

    for (size_t i = 0; i < operators.size(); ++i) {
        for (size_t j = i + 1; j < operators.size(); ++j) {
            // <A psi | B psi> = <AB>; real part gives the symmetrized
            // product, imaginary part the commutator.
            const Complex cross = Complex(images[i].adjoint() * images[j]);
            PairStats pair;
            pair.a = operators[i].first;
            pair.b = operators[j].first;
            pair.covariance = cross.real() - expectations[i] * expectations[j];
            pair.commutator_expectation = 2.0 * cross.imag();
            pair.uncertainty_product = spreads[i] * spreads[j];
            pair.robertson_bound = std::abs(cross.imag());
            if (spreads[i] > 0.0 && spreads[j] > 0.0) {
                pair.correlation = pair.covariance / pair.uncertainty_product;
            }
            report.pairs.push_back(std::move(pair));
        }
    }
    return report;
}

VerificationReport verify_algebra(
    const std::vector<NamedOperator>& operators,
    const std::vector<CommutatorRelation>& relations,
    const std::vector<int>& interior, double tol) {
    const auto find = [&operators](const std::string& name)
        -> const OperatorMatrix& {
        for (const auto& [n, op] : operators) {
            if (n == name) return op;
        }
        throw LabelError("verify_algebra: unknown operator \"" + name + "\"");
    };

    VerificationReport report;
    report.tol = tol;
    for (const auto& relation : relations) {
        const OperatorMatrix& a = find(relation.a);
        const OperatorMatrix& b = find(relation.b);
        OperatorMatrix residual = commutator(a, b);
        for (const auto& term : relation.rhs) {
            if (term.name == "I") {
                residual -= term.coeff *
                            OperatorMatrix::Identity(a.rows(), a.cols());
            } else {
                residual -= term.coeff * find(term.name);
            }
        }
        RelationResult result;
        result.text = relation.text;
        result.residual = max_abs_on(residual, interior);
        result.pass = result.residual <= tol;
        report.worst = std::max(report.worst, result.residual);
        report.all_pass = report.all_pass && result.pass;
        report.relations.push_back(std::move(result));
    }
    return report;
}

} // namespace qgame
