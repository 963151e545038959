#include "mpip/cholesky.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mpip/kernels.hpp"

namespace mpip {

namespace {

void require_square(const MatrixF64& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("matrix must be square");
}

float checked_half(double x) {
  if (!(std::abs(x) <= kHalfMax))
    throw OverflowError("value does not fit in binary16: " +
                        std::to_string(x));
  const float h = round_to_half(static_cast<float>(x));
  if (!std::isfinite(h))
    throw OverflowError("value rounds out of the binary16 range: " +
                        std::to_string(x));
  return h;
}

// Unblocked Cholesky with every scalar operation rounded to binary16.
void half_cholesky_inplace(MatrixF32& w) {
  const int n = w.rows();
  const auto r16 = [](float x) {
    const float y = round_to_half(x);
    if (!std::isfinite(y))
      throw OverflowError(
          "binary16 overflow during emulated half-precision factorization");
    return y;
  };
  for (int k = 0; k < n; ++k) {
    const float dk = w(k, k);
    if (!(dk > 0.0f))
      throw CholeskyBreakdown(
          k, "half cholesky breakdown: pivot " + std::to_string(k) +
                 " is not positive (" + std::to_string(dk) + ")");
    const float lkk = r16(std::sqrt(dk));
    w(k, k) = lkk;
    for (int i = k + 1; i < n; ++i) w(i, k) = r16(w(i, k) / lkk);
    for (int j = k + 1; j < n; ++j) {
      const float ljk = w(j, k);
      for (int i = j; i < n; ++i)
        w(i, j) = r16(w(i, j) - r16(w(i, k) * ljk));
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) w(i, j) = 0.0f;
}

MatrixF64 widened_factor(const CholeskyFactor& f) {
  return f.precision == Precision::binary64 ? f.l64 : to_double(f.l32);
}

}  // namespace

CholeskyFactor cholesky(const MatrixF64& m, Precision precision) {
  require_square(m);
  CholeskyFactor f;
  f.precision = precision;
  switch (precision) {
    case Precision::binary64: {
      f.l64 = m;
      kernels::cholesky_inplace(f.l64);
      break;
    }
    case Precision::binary32: {
      f.l32 = to_single(m);
      kernels::cholesky_inplace(f.l32);
      break;
    }
    case Precision::emulated_binary16: {
      const int n = m.rows();
      f.l32 = MatrixF32(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) f.l32(i, j) = checked_half(m(i, j));
      half_cholesky_inplace(f.l32);
      break;
    }
  }
  return f;
}

CholeskyFactor shifted_cholesky(const MatrixF64& m, double c_m,
                                double unit_roundoff) {
  require_square(m);
  const int n = m.rows();
  CholeskyFactor f;
  f.shift = c_m * unit_roundoff;

  if (unit_roundoff == kUnitRoundoffDouble) {
    f.precision = Precision::binary64;
    f.l64 = m;
    for (int i = 0; i < n; ++i) f.l64(i, i) = m(i, i) + f.shift * m(i, i);
    kernels::cholesky_inplace(f.l64);
  } else if (unit_roundoff == kUnitRoundoffSingle) {
    MatrixF32 w = to_single(m);
    const float s = static_cast<float>(f.shift);
    for (int i = 0; i < n; ++i) w(i, i) = w(i, i) + s * w(i, i);
    f.precision = Precision::binary32;
    f.l32 = std::move(w);
    kernels::cholesky_inplace(f.l32);
  } else if (unit_roundoff == kUnitRoundoffHalf) {
    f.precision = Precision::emulated_binary16;
    f.l32 = MatrixF32(n, n);
    const float s = checked_half(f.shift);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= i; ++j) f.l32(i, j) = checked_half(m(i, j));
      const float prod = round_to_half(s * f.l32(i, i));
      f.l32(i, i) = round_to_half(f.l32(i, i) + prod);
    }
    half_cholesky_inplace(f.l32);
  } else {
    throw std::invalid_argument(
        "shifted_cholesky: unit roundoff must be one of 2^-53, 2^-24, 2^-11");
  }
  return f;
}

CholeskyFactor shifted_cholesky(const MatrixF32& m, double c_m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("matrix must be square");
  CholeskyFactor f;
  f.precision = Precision::binary32;
  f.shift = c_m * kUnitRoundoffSingle;
  f.l32 = m;
  const float s = static_cast<float>(f.shift);
  for (int i = 0; i < m.rows(); ++i)
    f.l32(i, i) = f.l32(i, i) + s * f.l32(i, i);
  kernels::cholesky_inplace(f.l32);
  return f;
}

VectorF64 tri_solve(const CholeskyFactor& l, const VectorF64& w,
                    TriangularSide side) {
  const int n = l.dim();
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("tri_solve: dimension mismatch");
  for (int i = 0; i < n; ++i) {
    const double d =
        l.precision == Precision::binary64 ? l.l64(i, i) : l.l32(i, i);
    if (d == 0.0)
      throw std::domain_error("tri_solve: zero diagonal in factor");
  }

  switch (l.precision) {
    case Precision::binary64: {
      VectorF64 x = w;
      if (side == TriangularSide::forward)
        kernels::trsv_forward(l.l64, x.data());
      else
        kernels::trsv_backward(l.l64, x.data());
      return x;
    }
    case Precision::binary32: {
      VectorF32 x = to_single(w);
      if (side == TriangularSide::forward)
        kernels::trsv_forward(l.l32, x.data());
      else
        kernels::trsv_backward(l.l32, x.data());
      return to_double(x);
    }
    case Precision::emulated_binary16: {
      // Substitution with every operation rounded to binary16.
      const auto r16 = [](float v) {
        const float y = round_to_half(v);
        if (!std::isfinite(y))
          throw OverflowError("binary16 overflow in triangular solve");
        return y;
      };
      VectorF32 x(n);
      for (int i = 0; i < n; ++i) x[i] = checked_half(w[i]);
      if (side == TriangularSide::forward) {
        for (int i = 0; i < n; ++i) {
          float acc = x[i];
          for (int j = 0; j < i; ++j)
            acc = r16(acc - r16(l.l32(i, j) * x[j]));
          x[i] = r16(acc / l.l32(i, i));
        }
      } else {
        for (int i = n - 1; i >= 0; --i) {
          float acc = x[i];
          for (int j = i + 1; j < n; ++j)
            acc = r16(acc - r16(l.l32(j, i) * x[j]));
          x[i] = r16(acc / l.l32(i, i));
        }
      }
      return to_double(x);
    }
  }
  throw std::logic_error("unreachable");
}

VectorF64 precond_apply(const CholeskyFactor& l, const VectorF64& v) {
  if (l.precision != Precision::binary32)
    throw std::invalid_argument("precond_apply requires a binary32 factor");
  const int n = l.dim();
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("precond_apply: dimension mismatch");

  VectorF32 x(n);
  for (int i = 0; i < n; ++i) {
    x[i] = static_cast<float>(v[i]);
    if (!std::isfinite(x[i]))
      throw OverflowError(
          "float32 overflow while applying the preconditioner; fall back to "
          "the double-precision path");
  }
  kernels::trsv_forward(l.l32, x.data());
  kernels::trsv_backward(l.l32, x.data());
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(x[i]))
      throw OverflowError(
          "float32 overflow while applying the preconditioner; fall back to "
          "the double-precision path");
  }
  return to_double(x);
}

CholeskyFactor emulated_half_cholesky(const MatrixF64& h, double c_m) {
  require_square(h);
  const int n = h.rows();
  CholeskyFactor f;
  f.precision = Precision::emulated_binary16;
  f.shift = c_m * kUnitRoundoffHalf;
  f.l32 = MatrixF32(n, n);
  const float s = checked_half(f.shift);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) f.l32(i, j) = checked_half(h(i, j));
    f.l32(i, i) = round_to_half(f.l32(i, i) + s);
  }
  half_cholesky_inplace(f.l32);
  return f;
}

MatrixF64 preconditioned_matrix(const CholeskyFactor& l, const MatrixF64& m) {
  const int n = l.dim();
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument("preconditioned_matrix: dimension mismatch");
  const MatrixF64 lw = widened_factor(l);

  // S = L^{-1} M, one forward solve per column (rows of the symmetric M).
  MatrixF64 s(n, n);
  VectorF64 buf(n);
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < n; ++i) buf[i] = m(c, i);
    kernels::trsv_forward(lw, buf.data());
    for (int i = 0; i < n; ++i) s(i, c) = buf[i];
  }
  // P = L^{-1} S^T, then symmetrize.
  MatrixF64 p(n, n);
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < n; ++i) buf[i] = s(c, i);
    kernels::trsv_forward(lw, buf.data());
    for (int i = 0; i < n; ++i) p(i, c) = buf[i];
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      const double v = 0.5 * (p(i, j) + p(j, i));
      p(i, j) = v;
      p(j, i) = v;
    }
  return p;
}

}  // namespace mpip
