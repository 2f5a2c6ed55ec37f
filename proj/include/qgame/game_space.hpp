#ifndef QGAME_GAME_SPACE_HPP
#define QGAME_GAME_SPACE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qgame/errors.hpp"
#include "qgame/types.hpp"

namespace qgame {

/// A labeled basis with truncation metadata. Every concrete game space
/// (Fock levels, occupation tuples, irrep weight bases) lowers to one of
/// these so states, measurements and reports stay space-agnostic.
class GameSpace {
public:
    GameSpace(std::string description, std::vector<std::string> labels,
              std::vector<bool> interior);

    int dim() const { return static_cast<int>(labels_.size()); }
    const std::string& description() const { return description_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(i); }

    /// True when level i belongs to the interior subspace, i.e. the part
    /// of the truncated basis on which the untruncated algebra is exact.
    bool is_interior(int i) const { return interior_.at(i); }
    bool truncated() const;
    std::vector<int> interior_indices() const;

    std::optional<int> find_label(const std::string& label) const;
    int require_label(const std::string& label) const;

private:
    std::string description_;
    std::vector<std::string> labels_;
    std::vector<bool> interior_;
};

using GameSpacePtr = std::shared_ptr<const GameSpace>;

/// Normalized amplitude vector over a GameSpace basis.
class GameState {
public:
    GameState(GameSpacePtr space, StateVector amplitudes);

    const GameSpace& space() const { return *space_; }
    const GameSpacePtr& space_ptr() const { return space_; }
    const StateVector& amplitudes() const { return amplitudes_; }
    int dim() const { return static_cast<int>(amplitudes_.size()); }

    /// Largest amplitude magnitude outside the interior subspace.
    double boundary_leak() const;

private:
    GameSpacePtr space_;
    StateVector amplitudes_;
};

} // namespace qgame

#endif
