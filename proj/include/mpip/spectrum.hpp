#pragma once

#include <cstdint>

#include "mpip/matrix.hpp"

namespace mpip {

// SPD test matrix M = Q diag(lambda) Q^T with a prescribed spectrum:
// lambda_min and lambda_max at the extremes and count-2 log-uniform interior
// values, assigned cyclically when count < m. Q comes from the Householder QR
// of a seeded standard-normal matrix; identical seeds give bit-identical
// matrices on one platform. lambda_min == lambda_max returns lambda * I
// exactly.
MatrixF64 spd_from_spectrum(int m, double lambda_min, double lambda_max,
                            int count, std::uint64_t seed);

// Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps in float64,
// run to relative off-diagonal Frobenius norm 1e-12; sorted ascending.
// Throws after 100 sweeps without convergence.
VectorF64 jacobi_eigenvalues(const MatrixF64& m);

// 2-norm condition number lambda_max / |lambda_min| via jacobi_eigenvalues.
// Experiment-side measurement, not used in the solver hot path.
double cond_2(const MatrixF64& m);

}  // namespace mpip
