#pragma once

#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace mpip {

namespace testing {
// Observes every Matrix<double> allocation. Lets tests verify structurally
// that the mixed-precision solve path never materializes an m-by-m float64
// matrix. Null outside tests.
inline void (*f64_matrix_alloc_observer)(int rows, int cols) = nullptr;
}  // namespace testing

// Dense row-major matrix. Row-major keeps matrix rows contiguous, which the
// kernels rely on.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, T value = T(0))
      : rows_(rows), cols_(cols), data_(checked_size(rows, cols), value) {
    if constexpr (std::is_same_v<T, double>) {
      if (testing::f64_matrix_alloc_observer)
        testing::f64_matrix_alloc_observer(rows_, cols_);
    }
  }

  static Matrix identity(int n) {
    Matrix eye(n, n);
    for (int i = 0; i < n; ++i) eye(i, i) = T(1);
    return eye;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const T& operator()(int i, int j) const {
    return data_[std::size_t(i) * cols_ + j];
  }

  T* row(int i) { return data_.data() + std::size_t(i) * cols_; }
  const T* row(int i) const { return data_.data() + std::size_t(i) * cols_; }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

 private:
  static std::size_t checked_size(int rows, int cols) {
    if (rows <= 0 || cols <= 0)
      throw std::invalid_argument("matrix dimensions must be positive");
    return std::size_t(rows) * std::size_t(cols);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using MatrixF64 = Matrix<double>;
using MatrixF32 = Matrix<float>;
using VectorF64 = std::vector<double>;
using VectorF32 = std::vector<float>;

// Narrowing conversions treat overflow (and non-finite input) as an error,
// never as infinity.
float to_single(double x);
MatrixF32 to_single(const MatrixF64& a);
VectorF32 to_single(const VectorF64& v);

MatrixF64 to_double(const MatrixF32& a);
VectorF64 to_double(const VectorF32& v);

bool all_finite(const MatrixF64& a);
bool all_finite(const VectorF64& v);

}  // namespace mpip
