#ifndef COILPHASE_VERSION_HPP
#define COILPHASE_VERSION_HPP

namespace coilphase {

inline constexpr const char* version_string = "0.1.0";

}  // namespace coilphase

#endif  // COILPHASE_VERSION_HPP
