#include "qgame/game_space.hpp"

#include <cmath>
#include <sstream>

namespace qgame {

GameSpace::GameSpace(std::string description, std::vector<std::string> labels,
                     std::vector<bool> interior)
    : description_(std::move(description)),
      labels_(std::move(labels)),
      interior_(std::move(interior)) {
    if (labels_.empty()) {
        throw DimensionError("GameSpace: empty basis");
    }
    if (interior_.size() != labels_.size()) {
        throw DimensionError("GameSpace: interior mask size mismatch");
    }
}

bool GameSpace::truncated() const {
    for (bool b : interior_) {
        if (!b) return true;
    }
    return false;
}

std::vector<int> GameSpace::interior_indices() const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i) {
        if (interior_[i]) out.push_back(i);
    }
    return out;
}

std::optional<int> GameSpace::find_label(const std::string& label) const {
    for (int i = 0; i < dim(); ++i) {
        if (labels_[i] == label) return i;
    }
    return std::nullopt;
}

int GameSpace::require_label(const std::string& label) const {
    const auto idx = find_label(label);
    if (!idx) {
        throw LabelError("unknown basis label \"" + label + "\" in " +
                         description_);
    }
    return *idx;
}

GameState::GameState(GameSpacePtr space, StateVector amplitudes)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
    if (!space_) throw StateError("GameState: null space");
    if (amplitudes_.size() != space_->dim()) {
        std::ostringstream os;
        os << "GameState: amplitude vector length " << amplitudes_.size()
           << " does not match space dim " << space_->dim();
        throw DimensionError(os.str());
    }
    if (!amplitudes_.allFinite()) {
        throw StateError("GameState: non-finite amplitudes");
    }
    const double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "GameState: vector not normalized, |norm - 1| = "
           << std::abs(norm - 1.0);
        throw StateError(os.str());
    }
}

double GameState::boundary_leak() const {
    double worst = 0.0;
    for (int i = 0; i < dim(); ++i) {
        if (!space_->is_interior(i)) {
            worst = std::max(worst, std::abs(amplitudes_[i]));
        }
    }
    return worst;
}

} // namespace qgame
