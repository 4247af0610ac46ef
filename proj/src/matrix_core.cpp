#include "dynamap/matrix_core.hpp"

#include "dynamap/errors.hpp"
#include "dynamap/detail/format.hpp"

#include "dynamap/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

namespace dynamap {

namespace {

void require_hermitian(const ComplexMatrix& a, double tol_herm, const char* who) {
    const double residual = a.hermiticity_residual();
    if (!(residual <= tol_herm)) {
        throw NotHermitian(std::string(who) + ": Hermiticity residual " +
                           detail::format_residual(residual) + " exceeds tolerance");
    }
}

double offdiagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t p = 0; p < a.dim(); ++p) {
        for (std::size_t q = p + 1; q < a.dim(); ++q) {
            sum += std::norm(a(p, q));
        }
    }
    return std::sqrt(2.0 * sum);
}

} // namespace

double UnitaryPropagator::unitarity_residual() const {
    return frobenius_distance(multiply_adjoint(matrix, matrix),
                              ComplexMatrix::identity(matrix.dim()));
}

EigenDecomposition hermitian_eigendecompose(const ComplexMatrix& a, const Tolerances& tol) {
    if (!a.is_finite()) {
        throw InvalidArgument("eigendecompose: matrix has non-finite entries");
    }
    require_hermitian(a, tol.tol_herm, "eigendecompose");

    const std::size_t n = a.dim();
    // Work on the exactly Hermitian part; the residual check above bounds
    // what this discards.
    ComplexMatrix w(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            w(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    // Cyclic Jacobi. Each rotation zeroes w(p,q) with the unitary
    //   J(p,p)=c, J(p,q)=s e^{i phi}, J(q,p)=-s e^{-i phi}, J(q,q)=c,
    // phi = arg w(p,q), and (c,s) from the standard stable tangent formula
    // for the phased-out real 2x2 block. Off-diagonal mass is strictly
    // decreasing; quadratic convergence once it is small.
    const double unit = std::max(w.frobenius_norm(), 1.0);
    const double target = 1e-15 * unit;
    const std::size_t max_sweeps = 60;

    std::size_t sweep = 0;
    while (offdiagonal_norm(w) > target) {
        if (++sweep > max_sweeps) {
            throw ConvergenceFailure("eigendecompose: Jacobi sweep cap reached");
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx wpq = w(p, q);
                const double r = std::abs(wpq);
                if (r <= 1e-300) {
                    continue;
                }
                const cplx phase = wpq / r;
                const double app = w(p, p).real();
                const double aqq = w(q, q).real();
                const double tau = (aqq - app) / (2.0 * r);
                double t = 1.0;
                if (tau != 0.0) {
                    t = (tau > 0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                }
                const double c = 1.0 / std::hypot(1.0, t);
                const double s = t * c;
                const cplx sig = s * phase;        // J(p,q)
                const cplx sigc = std::conj(sig);  // -J(q,p)

                // Columns p and q of both w and v: X <- X J.
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx wip = w(i, p);
                    const cplx wiq = w(i, q);
                    w(i, p) = c * wip - sigc * wiq;
                    w(i, q) = sig * wip + c * wiq;
                    const cplx vip = v(i, p);
                    const cplx viq = v(i, q);
                    v(i, p) = c * vip - sigc * viq;
                    v(i, q) = sig * vip + c * viq;
                }
                // Rows p and q: X <- J† X.
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx wpj = w(p, j);
                    const cplx wqj = w(q, j);
                    w(p, j) = c * wpj - sig * wqj;
                    w(q, j) = sigc * wpj + c * wqj;
                }
                // Pin the rotated 2x2 block to its exact form.
                w(p, q) = 0.0;
                w(q, p) = 0.0;
                w(p, p) = cplx{w(p, p).real(), 0.0};
                w(q, q) = cplx{w(q, q).real(), 0.0};
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t lhs, std::size_t rhs) { return w(lhs, lhs).real() < w(rhs, rhs).real(); });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = w(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) {
            out.eigenvectors(i, k) = v(i, order[k]);
        }
    }
    return out;
}

double min_eigenvalue(const ComplexMatrix& a, const Tolerances& tol) {
    const EigenDecomposition eig = hermitian_eigendecompose(a, tol);
    return eig.eigenvalues.front();
}

UnitaryPropagator propagator(const ComplexMatrix& h, double t, const Tolerances& tol) {
    EigenDecomposition eig;
    try {
        eig = hermitian_eigendecompose(h, tol);
    } catch (const NotHermitian&) {
        throw NotHermitian("propagator: generator is not Hermitian");
    }
    const std::size_t n = h.dim();
    // U = V diag(e^{-i lambda t}) V†
    ComplexMatrix scaled = eig.eigenvectors;
    for (std::size_t k = 0; k < n; ++k) {
        const cplx phase = std::polar(1.0, -eig.eigenvalues[k] * t);
        for (std::size_t i = 0; i < n; ++i) {
            scaled(i, k) *= phase;
        }
    }
    UnitaryPropagator u{multiply_adjoint(scaled, eig.eigenvectors), n, t};
    const double residual = u.unitarity_residual();
    if (!(residual <= tol.tol_eq)) {
        throw ConvergenceFailure("propagator: unitarity residual " + detail::format_residual(residual));
    }
    return u;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    ComplexMatrix out(da * db);
    const auto& k = kernels::active();
    for (std::size_t ia = 0; ia < da; ++ia) {
        for (std::size_t ja = 0; ja < da; ++ja) {
            const cplx scale = a(ia, ja);
            for (std::size_t ib = 0; ib < db; ++ib) {
                cplx* dst = out.row(ia * db + ib) + ja * db;
                k.scale_store(db, scale, b.row(ib), dst);
            }
        }
    }
    return out;
}

ComplexMatrix partial_trace_env(const ComplexMatrix& x, std::size_t system_dim,
                                std::size_t env_dim) {
    if (x.dim() != system_dim * env_dim) {
        throw DimensionMismatch("partial_trace_env: joint dimension " + std::to_string(x.dim()) +
                                " is not " + std::to_string(system_dim) + "*" +
                                std::to_string(env_dim));
    }
    ComplexMatrix out(system_dim);
    for (std::size_t i = 0; i < system_dim; ++i) {
        for (std::size_t j = 0; j < system_dim; ++j) {
            cplx sum{};
            for (std::size_t k = 0; k < env_dim; ++k) {
                sum += x(i * env_dim + k, j * env_dim + k);
            }
            out(i, j) = sum;
        }
    }
    return out;
}

namespace {

// Box-Muller on top of mt19937_64, so the stream depends only on the seed
// and not on the standard library's distribution internals.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53; // (0, 1]
        const double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;         // [0, 1)
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    cplx next_complex() {
        const double re = next();
        const double im = next();
        return {re, im};
    }

private:
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace

ComplexMatrix sample_ginibre(std::size_t dim, std::uint64_t seed) {
    GaussianSource gauss(seed);
    ComplexMatrix g(dim);
    for (cplx& v : g.flat()) {
        v = gauss.next_complex();
    }
    return g;
}

ComplexMatrix sample_hermitian(std::size_t dim, std::uint64_t seed) {
    const ComplexMatrix g = sample_ginibre(dim, seed);
    ComplexMatrix h(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
        }
    }
    return h;
}

DensityMatrix sample_density_matrix(std::size_t dim, std::uint64_t seed) {
    if (dim == 0) {
        throw InvalidArgument("sample_density_matrix: dim must be positive");
    }
    const ComplexMatrix g = sample_ginibre(dim, seed);
    ComplexMatrix rho = multiply_adjoint(g, g);
    rho *= 1.0 / rho.trace().real();
    return DensityMatrix::validated(std::move(rho));
}

DensityMatrix DensityMatrix::validated(ComplexMatrix m, const Tolerances& tol) {
    if (m.dim() == 0) {
        throw InvalidArgument("DensityMatrix: dimension must be positive");
    }
    if (!m.is_finite()) {
        throw InvalidArgument("DensityMatrix: non-finite entries");
    }
    require_hermitian(m, tol.tol_herm, "DensityMatrix");
    const double trace_residual = std::abs(m.trace() - cplx{1.0, 0.0});
    if (!(trace_residual <= tol.tol_eq)) {
        throw InvalidArgument("DensityMatrix: trace residual " + detail::format_residual(trace_residual));
    }
    const double lambda_min = min_eigenvalue(m, tol);
    if (!(lambda_min >= -tol.tol_psd)) {
        throw InvalidArgument("DensityMatrix: minimum eigenvalue " + detail::format_residual(lambda_min) +
                              " below -tol_psd");
    }
    return DensityMatrix(std::move(m));
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace dynamap
