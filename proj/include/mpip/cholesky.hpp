#pragma once

#include "mpip/errors.hpp"
#include "mpip/matrix.hpp"
#include "mpip/precision.hpp"

namespace mpip {

// Lower-triangular Cholesky factor tagged with the precision that produced
// it. Reduced-precision factors keep their entries widened: float32 factors
// in `l32`, emulated binary16 factors as exact half values stored in `l32`.
struct CholeskyFactor {
  Precision precision = Precision::binary64;
  // Relative diagonal shift that was applied before factoring (c_m * u);
  // emulated_half_cholesky applies an absolute c_m * u_h instead.
  double shift = 0.0;
  MatrixF64 l64;
  MatrixF32 l32;

  int dim() const {
    return precision == Precision::binary64 ? l64.rows() : l32.rows();
  }
};

enum class TriangularSide { forward, backward };

// Plain Cholesky of M (lower triangle only is referenced) with all arithmetic
// at the tagged precision. Throws CholeskyBreakdown with the failing pivot.
CholeskyFactor cholesky(const MatrixF64& m, Precision precision);

// Factors M + c_m * u * diag(M) at the precision whose unit roundoff is u.
CholeskyFactor shifted_cholesky(const MatrixF64& m, double c_m,
                                double unit_roundoff);
// float32 fast path for a matrix that is already stored in float32.
CholeskyFactor shifted_cholesky(const MatrixF32& m, double c_m);

// L^{-1} w (forward) or L^{-T} w (backward), arithmetic at the factor's
// tagged precision; the result is widened to float64.
VectorF64 tri_solve(const CholeskyFactor& l, const VectorF64& w,
                    TriangularSide side);

// Rounds v to float32, applies L^{-T} L^{-1} entirely in float32, widens the
// result. Requires a binary32 factor. Overflow raises OverflowError with a
// hint to fall back to the double-precision path.
VectorF64 precond_apply(const CholeskyFactor& l, const VectorF64& v);

// Scalar Cholesky of H + c_m * u_h * I where every add/multiply/divide/sqrt
// result is rounded to the nearest binary16 value. H is expected pre-scaled
// to unit diagonal; values beyond +-65504 raise OverflowError.
CholeskyFactor emulated_half_cholesky(const MatrixF64& h, double c_m);

// L^{-1} M L^{-T} evaluated with float64 substitution on the widened factor
// entries. Measurement path for the condition-number experiments, not part
// of the solver.
MatrixF64 preconditioned_matrix(const CholeskyFactor& l, const MatrixF64& m);

}  // namespace mpip
