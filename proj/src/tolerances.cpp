#include "dynamap/tolerances.hpp"

#include "dynamap/errors.hpp"

#include <cstdlib>
#include <string>

namespace dynamap {

namespace {

void apply_env(const char* name, double& value) {
    if (const char* raw = std::getenv(name)) {
        try {
            std::size_t consumed = 0;
            const double parsed = std::stod(raw, &consumed);
            if (consumed != std::string(raw).size() || !(parsed > 0.0)) {
                throw std::invalid_argument("range");
            }
            value = parsed;
        } catch (const std::exception&) {
            throw InvalidArgument(std::string(name) + ": expected a positive real, got \"" +
                                  raw + "\"");
        }
    }
}

} // namespace

Tolerances tolerances_from_env(Tolerances base) {
    apply_env("DYNAMAP_TOL_EQ", base.tol_eq);
    apply_env("DYNAMAP_TOL_HERM", base.tol_herm);
    apply_env("DYNAMAP_TOL_PSD", base.tol_psd);
    return base;
}

} // namespace dynamap
