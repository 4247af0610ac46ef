#pragma once

#include <cstdio>
#include <string>

namespace dynamap::detail {

/// Compact scientific formatting for residuals quoted in error messages.
inline std::string format_residual(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

} // namespace dynamap::detail
