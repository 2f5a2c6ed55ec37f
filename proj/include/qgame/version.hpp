#ifndef QGAME_VERSION_HPP
#define QGAME_VERSION_HPP

namespace qgame {

inline constexpr const char* kVersion = "1.0.0";

} // namespace qgame

#endif
