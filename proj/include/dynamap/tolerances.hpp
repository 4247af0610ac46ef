#pragma once

namespace dynamap {

/// Numerical tolerances used by validation and verdicts.
///
/// tol_herm bounds Hermiticity residuals, tol_eq bounds equality residuals
/// (trace, unitarity, reconstruction), and tol_psd is the eigenvalue floor
/// below which a matrix is reported as not positive semidefinite.
struct Tolerances {
    double tol_herm = 1e-10;
    double tol_eq = 1e-10;
    double tol_psd = 1e-9;
};

/// Returns `base` with any DYNAMAP_TOL_EQ / DYNAMAP_TOL_HERM / DYNAMAP_TOL_PSD
/// environment variables applied on top.
Tolerances tolerances_from_env(Tolerances base = {});

} // namespace dynamap
