#ifndef SUPG_VERSION_HPP
#define SUPG_VERSION_HPP

namespace supg {

inline constexpr const char* kVersion = "supg 0.1.0";

}  // namespace supg

#endif
