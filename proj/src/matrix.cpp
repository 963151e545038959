#include "mpip/matrix.hpp"

#include <cmath>

#include "mpip/errors.hpp"

namespace mpip {

float to_single(double x) {
  const float f = static_cast<float>(x);
  if (!std::isfinite(f))
    throw OverflowError("value does not fit in float32: " + std::to_string(x));
  return f;
}

MatrixF32 to_single(const MatrixF64& a) {
  MatrixF32 out(a.rows(), a.cols());
  const double* src = a.data();
  float* dst = out.data();
  for (std::size_t i = 0; i < a.size(); ++i) {
    dst[i] = static_cast<float>(src[i]);
    if (!std::isfinite(dst[i]))
      throw OverflowError("matrix entry does not fit in float32");
  }
  return out;
}

VectorF32 to_single(const VectorF64& v) {
  VectorF32 out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_single(v[i]);
  return out;
}

MatrixF64 to_double(const MatrixF32& a) {
  MatrixF64 out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i)
    out.data()[i] = static_cast<double>(a.data()[i]);
  return out;
}

VectorF64 to_double(const VectorF32& v) {
  return VectorF64(v.begin(), v.end());
}

bool all_finite(const MatrixF64& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!std::isfinite(a.data()[i])) return false;
  return true;
}

bool all_finite(const VectorF64& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace mpip
