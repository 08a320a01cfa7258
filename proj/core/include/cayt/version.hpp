#ifndef CAYT_VERSION_HPP
#define CAYT_VERSION_HPP

namespace cayt {

inline constexpr const char* kVersion = "0.1.0";

} // namespace cayt

#endif
