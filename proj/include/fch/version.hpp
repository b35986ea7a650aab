#ifndef FCH_VERSION_HPP
#define FCH_VERSION_HPP

namespace fch {

inline constexpr const char* kVersion = "fchlab 0.1.0";

} // namespace fch

#endif
