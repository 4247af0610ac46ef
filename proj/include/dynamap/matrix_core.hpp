#pragma once

#include "dynamap/complex_matrix.hpp"
#include "dynamap/tolerances.hpp"

#include <cstdint>
#include <vector>

namespace dynamap {

/// Hermitian eigendecomposition A = V diag(values) V†.
struct EigenDecomposition {
    std::vector<double> eigenvalues; // ascending
    ComplexMatrix eigenvectors;      // orthonormal columns, column k pairs with eigenvalues[k]
};

/// Hermitian, unit-trace, positive-semidefinite matrix. Construct through
/// validated() so the invariants actually hold.
class DensityMatrix {
public:
    static DensityMatrix validated(ComplexMatrix m, const Tolerances& tol = {});

    const ComplexMatrix& matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.dim(); }

private:
    explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
    ComplexMatrix matrix_;
};

/// e^{-iHt} together with the generator dimension and time that produced it.
struct UnitaryPropagator {
    ComplexMatrix matrix;
    std::size_t generator_dim = 0;
    double time = 0.0;

    /// ‖U U† − 1‖_F
    double unitarity_residual() const;
};

/// Cyclic complex Jacobi iteration. Eigenvalues ascending; throws
/// NotHermitian when the input residual exceeds tol_herm and
/// ConvergenceFailure if the sweep cap is hit.
EigenDecomposition hermitian_eigendecompose(const ComplexMatrix& a, const Tolerances& tol = {});

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& a, const Tolerances& tol = {});

UnitaryPropagator propagator(const ComplexMatrix& h, double t, const Tolerances& tol = {});

/// Kronecker product; the left factor is the system factor repo-wide.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace over the right (environment) factor of an (N*M)x(N*M) matrix:
/// Y[i,j] = sum_k X[i*M+k, j*M+k].
ComplexMatrix partial_trace_env(const ComplexMatrix& x, std::size_t system_dim,
                                std::size_t env_dim);

/// Matrix of independent standard complex Gaussian entries from a
/// deterministic generator.
ComplexMatrix sample_ginibre(std::size_t dim, std::uint64_t seed);

/// (G + G†)/2 for a Ginibre G.
ComplexMatrix sample_hermitian(std::size_t dim, std::uint64_t seed);

/// G G† / Tr[G G†]; full rank with probability 1, identical output for
/// identical (dim, seed).
DensityMatrix sample_density_matrix(std::size_t dim, std::uint64_t seed);

/// Splitmix-style mix of a base seed and a stream index, for deriving
/// independent sub-seeds deterministically.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

} // namespace dynamap
