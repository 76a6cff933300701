#ifndef COLLAR_FORMAT_HPP
#define COLLAR_FORMAT_HPP

#include <cstdio>
#include <string>

namespace collar {

// Fixed numeric formatting shared by every emitted file: 17 significant
// digits in JSON (lossless round-trip), 9 in CSV (readability).  All report
// writers go through these two so byte-identical reruns are achievable.
inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt_g9(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

} // namespace collar

#endif
