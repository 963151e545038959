#pragma once

#include <span>

#include "mpip/matrix.hpp"

// Dense kernels. The OpenMP entry points parallelize over independent output
// elements only; every reduction uses a fixed lane order that does not depend
// on the thread schedule, so parallel results are bit-identical to the
// serial:: reference (which runs the same arithmetic without OpenMP).
namespace mpip::kernels {

// y = A x
void matvec(const MatrixF64& a, std::span<const double> x, std::span<double> y);
// y = A^T x
void matvec_transpose(const MatrixF64& a, std::span<const double> x,
                      std::span<double> y);

// out = A diag(d)
template <typename T>
void scale_columns(const Matrix<T>& a, std::span<const T> d, Matrix<T>& out);

// m = b b^T; only the lower triangle of m is written
template <typename T>
void syrk_lower(const Matrix<T>& b, Matrix<T>& m);

// In-place lower Cholesky of the matrix's lower triangle. The strictly upper
// part is ignored on input and zeroed on output. Blocked right-looking; the
// k-loop is sequential, so the result is deterministic for any thread count.
// Throws CholeskyBreakdown when a pivot is not positive.
template <typename T>
void cholesky_inplace(Matrix<T>& m);

// x := L^{-1} x and x := L^{-T} x. O(n^2); single-threaded.
template <typename T>
void trsv_forward(const Matrix<T>& l, T* x);
template <typename T>
void trsv_backward(const Matrix<T>& l, T* x);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> v);
double norm1(std::span<const double> v);
double norm_inf(std::span<const double> v);

namespace serial {
void matvec(const MatrixF64& a, std::span<const double> x, std::span<double> y);
void matvec_transpose(const MatrixF64& a, std::span<const double> x,
                      std::span<double> y);
template <typename T>
void scale_columns(const Matrix<T>& a, std::span<const T> d, Matrix<T>& out);
template <typename T>
void syrk_lower(const Matrix<T>& b, Matrix<T>& m);
template <typename T>
void cholesky_inplace(Matrix<T>& m);
}  // namespace serial

}  // namespace mpip::kernels
