#ifndef SIEGEL3_VERSION_HPP
#define SIEGEL3_VERSION_HPP

namespace siegel3 {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
