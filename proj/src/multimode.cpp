#include "qgame/multimode.hpp"

#include <algorithm>
#include <sstream>

#include "qgame/fock.hpp"

namespace qgame {

namespace {

constexpr long long kMaxDim = 1000000;

} // namespace

MultiGameSpace::MultiGameSpace(std::vector<int> n_max,
                               std::optional<long long> total_cutoff)
    : n_max_(std::move(n_max)), total_cutoff_(total_cutoff) {
    if (n_max_.empty()) {
        throw DimensionError("MultiGameSpace: need at least one mode");
    }
    long long d = 1;
    for (int m : n_max_) {
        if (m < 1) {
            throw DimensionError("MultiGameSpace: per-mode n_max must be >= 1");
        }
        d *= (m + 1);
        if (d > kMaxDim) {
            std::ostringstream os;
            os << "MultiGameSpace: product dimension exceeds capacity guard "
               << kMaxDim;
            throw CapacityError(os.str());
        }
    }
    dim_ = d;
    if (total_cutoff_ && *total_cutoff_ < 0) {
        throw DimensionError("MultiGameSpace: total_cutoff must be >= 0");
    }
}

std::vector<int> MultiGameSpace::mode_dims() const {
    std::vector<int> out(n_max_.size());
    for (size_t i = 0; i < n_max_.size(); ++i) out[i] = n_max_[i] + 1;
    return out;
}

std::vector<int> MultiGameSpace::tuple_of(long long index) const {
    if (index < 0 || index >= dim_) {
        throw DimensionError("MultiGameSpace: basis index out of range");
    }
    std::vector<int> tuple(modes());
    long long rest = index;
    for (int i = modes() - 1; i >= 0; --i) {
        const long long d = n_max_[i] + 1;
        tuple[i] = static_cast<int>(rest % d);
        rest /= d;
    }
    return tuple;
}

long long MultiGameSpace::index_of(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != modes()) {
        throw DimensionError("MultiGameSpace: tuple length mismatch");
    }
    long long index = 0;
    for (int i = 0; i < modes(); ++i) {
        if (tuple[i] < 0 || tuple[i] > n_max_[i]) {
            throw DimensionError("MultiGameSpace: occupation out of range");
        }
        index = index * (n_max_[i] + 1) + tuple[i];
    }
    return index;
}

long long MultiGameSpace::total_of(long long index) const {
    const auto tuple = tuple_of(index);
    long long total = 0;
    for (int n : tuple) total += n;
    return total;
}

long long MultiGameSpace::max_total() const {
    long long total = 0;
    for (int m : n_max_) total += m;
    return total;
}

long long MultiGameSpace::interior_total_max() const {
    long long m = *std::min_element(n_max_.begin(), n_max_.end());
    long long interior = m - 1;
    if (total_cutoff_) interior = std::min(interior, *total_cutoff_);
    return interior;
}

std::vector<int> MultiGameSpace::interior_indices() const {
    const long long cap = interior_total_max();
    std::vector<int> out;
    for (long long i = 0; i < dim_; ++i) {
        if (total_of(i) <= cap) out.push_back(static_cast<int>(i));
    }
    return out;
}

GameSpacePtr MultiGameSpace::game_space() const {
    const long long cap = interior_total_max();
    std::vector<std::string> labels(dim_);
    std::vector<bool> interior(dim_);
    for (long long i = 0; i < dim_; ++i) {
        const auto tuple = tuple_of(i);
        std::string label = "n=";
        for (size_t j = 0; j < tuple.size(); ++j) {
            if (j) label += ',';
            label += std::to_string(tuple[j]);
        }
        labels[i] = std::move(label);
        interior[i] = total_of(i) <= cap;
    }
    std::ostringstream os;
    os << "multimode(K=" << modes() << ", n_max=";
    for (int i = 0; i < modes(); ++i) {
        if (i) os << ",";
        os << n_max_[i];
    }
    if (total_cutoff_) os << ", cutoff=" << *total_cutoff_;
    os << ")";
    return std::make_shared<GameSpace>(os.str(), std::move(labels),
                                       std::move(interior));
}

MultimodeOperators build_multimode(const MultiGameSpace& space) {
    const auto dims = space.mode_dims();
    MultimodeOperators ops;
    ops.raising.reserve(space.modes());
    ops.lowering.reserve(space.modes());
    ops.number.reserve(space.modes());
    for (int mode = 0; mode < space.modes(); ++mode) {
        const FockSpace local(space.n_max()[mode]);
        const LadderPair ladder = build_ladder(local);
        ops.raising.push_back(embed_mode(ladder.raising, mode, dims));
        ops.lowering.push_back(embed_mode(ladder.lowering, mode, dims));
        ops.number.push_back(embed_mode(build_number(local), mode, dims));
    }
    return ops;
}

void require_hermitian_coefficients(const BilinearPayoff& payoff,
                                    int expected_modes) {
    const auto& p = payoff.coefficients;
    if (p.rows() != expected_modes || p.cols() != expected_modes) {
        std::ostringstream os;
        os << "bilinear payoff \"" << payoff.name << "\": coefficient matrix "
           << p.rows() << "x" << p.cols() << " does not match K="
           << expected_modes;
        throw CoefficientError(os.str());
    }
    const double defect = hermiticity_defect(p);
    if (defect > 1e-12) {
        std::ostringstream os;
        os << "bilinear payoff \"" << payoff.name
           << "\": coefficient matrix not Hermitian (defect " << defect << ")";
        throw CoefficientError(os.str());
    }
}

OperatorMatrix realize_bilinear(const MultimodeOperators& ops,
                                const BilinearPayoff& payoff,
                                BilinearOrdering ordering) {
    const int k = static_cast<int>(ops.raising.size());
    require_hermitian_coefficients(payoff, k);
    const long long d = ops.raising.front().rows();
    OperatorMatrix out = OperatorMatrix::Zero(d, d);
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            const Complex c = payoff.coefficients(a, b);
            if (c == Complex(0.0, 0.0)) continue;
            if (ordering == BilinearOrdering::annihilator_first) {
                out.noalias() += c * (ops.lowering[a] * ops.raising[b]);
            } else {
                out.noalias() += c * (ops.raising[a] * ops.lowering[b]);
            }
        }
    }
    return out;
}

OperatorMatrix realize_bilinear(const MultiGameSpace& space,
                                const BilinearPayoff& payoff,
                                BilinearOrdering ordering) {
    require_hermitian_coefficients(payoff, space.modes());
    return realize_bilinear(build_multimode(space), payoff, ordering);
}

OperatorMatrix total_number(const MultimodeOperators& ops) {
    OperatorMatrix out = ops.number.front();
    for (size_t i = 1; i < ops.number.size(); ++i) out += ops.number[i];
    return out;
}

OperatorMatrix signed_number(const MultiGameSpace& space,
                             const std::vector<int>& signs) {
    if (static_cast<int>(signs.size()) != space.modes()) {
        throw CoefficientError("signed_number: need one sign per mode");
    }
    for (int s : signs) {
        if (s != 1 && s != -1) {
            throw CoefficientError("signed_number: signs must be +1 or -1");
        }
    }
    const long long d = space.dim();
    OperatorMatrix out = OperatorMatrix::Zero(d, d);
    for (long long i = 0; i < d; ++i) {
        const auto tuple = space.tuple_of(i);
        long long value = 0;
        for (int m = 0; m < space.modes(); ++m) {
            value += static_cast<long long>(signs[m]) * tuple[m];
        }
        out(i, i) = static_cast<double>(value);
    }
    return out;
}

bool noncommutativity_criterion(int num_subgames) {
    if (num_subgames < 1) {
        throw DimensionError("noncommutativity_criterion: K must be >= 1");
    }
    const long long k = num_subgames;
    return k * k - 1 < 2 * k;
}

std::vector<int> number_sector(const MultiGameSpace& space, long long total) {
    if (total < 0 || total > space.max_total()) {
        std::ostringstream os;
        os << "number_sector: total " << total << " outside [0, "
           << space.max_total() << "]";
        throw DimensionError(os.str());
    }
    std::vector<int> out;
    for (long long i = 0; i < space.dim(); ++i) {
        if (space.total_of(i) == total) out.push_back(static_cast<int>(i));
    }
    return out;
}

} // namespace qgame
