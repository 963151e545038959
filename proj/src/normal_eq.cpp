#include "mpip/normal_eq.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "mpip/kernels.hpp"

namespace mpip {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

CholeskyFactor factor_with_retry_f32(const MatrixF32& m, double c_m) {
  try {
    return shifted_cholesky(m, c_m);
  } catch (const CholeskyBreakdown&) {
    return shifted_cholesky(m, 4.0 * c_m);
  }
}

CholeskyFactor factor_with_retry_f64(const MatrixF64& m, double c_m) {
  try {
    return shifted_cholesky(m, c_m, kUnitRoundoffDouble);
  } catch (const CholeskyBreakdown&) {
    return shifted_cholesky(m, 4.0 * c_m, kUnitRoundoffDouble);
  }
}

// M = A D^{-1} A^T + delta I in float64, via B = A diag(1/sqrt(D)).
MatrixF64 normal_matrix_f64(const MatrixF64& a, const VectorF64& d,
                            double delta) {
  const int m = a.rows(), n = a.cols();
  VectorF64 dinv_sqrt(n);
  for (int j = 0; j < n; ++j) dinv_sqrt[j] = 1.0 / std::sqrt(d[j]);
  MatrixF64 b(m, n);
  kernels::scale_columns<double>(a, dinv_sqrt, b);
  MatrixF64 mat(m, m);
  kernels::syrk_lower(b, mat);
  for (int i = 0; i < m; ++i) {
    mat(i, i) += delta;
    for (int j = i + 1; j < m; ++j) mat(i, j) = mat(j, i);
  }
  return mat;
}

void check_dims(const MatrixF64& a, const VectorF64& d, const VectorF64& w) {
  if (static_cast<int>(d.size()) != a.cols() ||
      static_cast<int>(w.size()) != a.rows())
    throw std::invalid_argument("normal equations: dimension mismatch");
}

}  // namespace

const char* solve_mode_name(SolveMode mode) {
  return mode == SolveMode::mixed ? "mixed" : "double";
}

ScaledSystem assemble_rhs(const MatrixF64& a, const VectorF64& x,
                          const VectorF64& z, const NewtonRhs& rhs,
                          double rho) {
  const int m = a.rows(), n = a.cols();
  if (static_cast<int>(x.size()) != n || static_cast<int>(z.size()) != n ||
      static_cast<int>(rhs.xi.size()) != m ||
      static_cast<int>(rhs.zeta.size()) != n ||
      static_cast<int>(rhs.eta.size()) != n)
    throw std::invalid_argument("assemble_rhs: dimension mismatch");

  ScaledSystem sys;
  sys.d.resize(n);
  VectorF64 t(n);
  for (int j = 0; j < n; ++j) {
    if (!(x[j] > 0.0))
      throw std::domain_error(
          "assemble_rhs: iterate left the open orthant (x[" +
          std::to_string(j) + "] = " + std::to_string(x[j]) + ")");
    sys.d[j] = z[j] / x[j] + rho;
    t[j] = (rhs.zeta[j] - rhs.eta[j] / x[j]) / sys.d[j];
  }
  sys.w.resize(m);
  kernels::matvec(a, t, sys.w);
  for (int i = 0; i < m; ++i) sys.w[i] += rhs.xi[i];
  return sys;
}

std::pair<VectorF64, CgStats> pcg(const LinearOperator& op,
                                  const LinearOperator& precond,
                                  const VectorF64& w, double tol,
                                  int max_iters) {
  if (!(tol > 0.0)) throw std::invalid_argument("pcg: tol must be positive");
  const auto t0 = Clock::now();
  const std::size_t m = w.size();

  CgStats stats;
  VectorF64 x(m, 0.0);
  stats.final_residual = kernels::norm2(w);  // true residual of the zero iterate
  if (stats.final_residual <= tol) {
    stats.converged = true;
    stats.seconds = seconds_since(t0);
    return {x, stats};
  }

  VectorF64 r = w;
  VectorF64 zhat = precond(r);
  VectorF64 p = zhat;
  double rz = kernels::dot(r, zhat);

  VectorF64 best_x = x;
  double best_res = stats.final_residual;

  for (int it = 1; it <= max_iters; ++it) {
    const VectorF64 q = op(p);
    const double pq = kernels::dot(p, q);
    if (!(pq > 0.0) || !std::isfinite(pq)) break;  // lost positive definiteness
    const double alpha = rz / pq;
    for (std::size_t i = 0; i < m; ++i) x[i] += alpha * p[i];
    for (std::size_t i = 0; i < m; ++i) r[i] -= alpha * q[i];

    // True residual check; the operator application is cheap relative to the
    // factorization, and certifies the stopping test exactly.
    VectorF64 true_r = op(x);
    for (std::size_t i = 0; i < m; ++i) true_r[i] = w[i] - true_r[i];
    const double res = kernels::norm2(true_r);
    stats.iterations = it;
    if (res < best_res) {
      best_res = res;
      best_x = x;
    }
    if (res <= tol) {
      stats.final_residual = res;
      stats.converged = true;
      stats.seconds = seconds_since(t0);
      return {x, stats};
    }

    zhat = precond(r);
    const double rz_next = kernels::dot(r, zhat);
    if (rz_next == 0.0 || !std::isfinite(rz_next)) break;
    const double beta = rz_next / rz;
    rz = rz_next;
    for (std::size_t i = 0; i < m; ++i) p[i] = zhat[i] + beta * p[i];
  }

  stats.final_residual = best_res;
  stats.converged = false;
  stats.seconds = seconds_since(t0);
  return {best_x, stats};
}

MixedSolve mixed_precision_solve(const MatrixF64& a, const VectorF64& d,
                                 const VectorF64& w, double delta, double c_m,
                                 double tol, int max_iters) {
  check_dims(a, d, w);
  const int m = a.rows(), n = a.cols();
  if (max_iters <= 0) max_iters = 2 * m;

  MixedSolve out;
  const auto t_build = Clock::now();
  CholeskyFactor factor;
  try {
    // dtilde = sqrt(D^{-1}) in float64; Mtilde = A dtilde rounded and
    // multiplied in float32; M = Mtilde Mtilde^T + delta I in float32.
    VectorF64 dinv_sqrt(n);
    for (int j = 0; j < n; ++j) dinv_sqrt[j] = 1.0 / std::sqrt(d[j]);
    const MatrixF32 a32 = to_single(a);
    const VectorF32 dts = to_single(dinv_sqrt);
    MatrixF32 bt(m, n);
    kernels::scale_columns<float>(a32, dts, bt);
    MatrixF32 m32(m, m);
    kernels::syrk_lower(bt, m32);
    const float delta32 = to_single(delta);
    for (int i = 0; i < m; ++i) m32(i, i) += delta32;
    out.build_seconds = seconds_since(t_build);

    const auto t_factor = Clock::now();
    try {
      factor = factor_with_retry_f32(m32, c_m);
    } catch (const CholeskyBreakdown& e) {
      out.factor_seconds = seconds_since(t_factor);
      out.fallback_reason = e.what();
      return out;
    }
    out.factor_seconds = seconds_since(t_factor);
  } catch (const OverflowError& e) {
    out.build_seconds = seconds_since(t_build);
    out.fallback_reason = e.what();
    return out;
  }

  // The operator stays in float64 and never forms the m-by-m matrix:
  // v -> A D^{-1} A^T v + delta v as two matvecs and a diagonal scale.
  const auto op = [&](const VectorF64& v) {
    VectorF64 tmp(n), result(m);
    kernels::matvec_transpose(a, v, tmp);
    for (int j = 0; j < n; ++j) tmp[j] /= d[j];
    kernels::matvec(a, tmp, result);
    for (int i = 0; i < m; ++i) result[i] += delta * v[i];
    return result;
  };
  const auto precond = [&](const VectorF64& v) { return precond_apply(factor, v); };

  try {
    auto [dy, stats] = pcg(op, precond, w, tol, max_iters);
    out.dy = std::move(dy);
    out.cg = stats;
    if (!stats.converged) {
      out.fallback_reason = "cg did not reach tol " + std::to_string(tol) +
                            " within " + std::to_string(max_iters) +
                            " iterations";
      return out;
    }
  } catch (const OverflowError& e) {
    out.fallback_reason = e.what();
    return out;
  }
  out.ok = true;
  return out;
}

DirectSolve double_precision_solve(const MatrixF64& a, const VectorF64& d,
                                   const VectorF64& w, double delta,
                                   double c_m) {
  return double_precision_solve_pair(a, d, w, VectorF64(), delta, c_m).first;
}

std::pair<DirectSolve, VectorF64> double_precision_solve_pair(
    const MatrixF64& a, const VectorF64& d, const VectorF64& w1,
    const VectorF64& w2, double delta, double c_m) {
  check_dims(a, d, w1);
  const int m = a.rows();

  DirectSolve out;
  const auto t_build = Clock::now();
  const MatrixF64 mat = normal_matrix_f64(a, d, delta);
  out.build_seconds = seconds_since(t_build);

  const auto t_factor = Clock::now();
  CholeskyFactor factor;
  try {
    factor = factor_with_retry_f64(mat, c_m);
  } catch (const CholeskyBreakdown& e) {
    throw SolverFailure(
        std::string("normal equations not numerically SPD in float64 even "
                    "after the shift retry: ") +
        e.what());
  }
  out.factor_seconds = seconds_since(t_factor);

  double fro = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) fro += mat(i, j) * mat(i, j);
  fro = std::sqrt(fro);

  const auto solve_one = [&](const VectorF64& w) {
    VectorF64 dy =
        tri_solve(factor, tri_solve(factor, w, TriangularSide::forward),
                  TriangularSide::backward);
    // One step of residual correction keeps the direct path honest when the
    // matrix conditioning approaches 1/u_d.
    VectorF64 res(m);
    kernels::matvec(mat, dy, res);
    for (int i = 0; i < m; ++i) res[i] = w[i] - res[i];
    const double res_norm = kernels::norm2(res);
    if (res_norm >
        1e3 * kUnitRoundoffDouble * fro * kernels::norm2(dy)) {
      const VectorF64 corr =
          tri_solve(factor, tri_solve(factor, res, TriangularSide::forward),
                    TriangularSide::backward);
      for (int i = 0; i < m; ++i) dy[i] += corr[i];
      out.refined = true;
    }
    return dy;
  };

  out.dy = solve_one(w1);
  VectorF64 dy2;
  if (!w2.empty()) {
    if (w2.size() != w1.size())
      throw std::invalid_argument("double_precision_solve_pair: rhs mismatch");
    dy2 = solve_one(w2);
  }
  return {std::move(out), std::move(dy2)};
}

std::pair<VectorF64, VectorF64> recover_direction(
    const MatrixF64& a, const VectorF64& x, const VectorF64& z,
    const VectorF64& d, const VectorF64& dy, const VectorF64& zeta,
    const VectorF64& eta, double rho) {
  const int m = a.rows(), n = a.cols();
  if (static_cast<int>(dy.size()) != m || static_cast<int>(x.size()) != n ||
      static_cast<int>(z.size()) != n)
    throw std::invalid_argument("recover_direction: dimension mismatch");

  VectorF64 aty(n);
  kernels::matvec_transpose(a, dy, aty);

  VectorF64 dx(n), dz(n);
  for (int j = 0; j < n; ++j) {
    if (!(x[j] > 0.0))
      throw std::domain_error("recover_direction: x must be strictly positive");
    dx[j] = (aty[j] - zeta[j] + eta[j] / x[j]) / d[j];
    dz[j] = zeta[j] + rho * dx[j] - aty[j];
  }
  return {std::move(dx), std::move(dz)};
}

ResidualNorms residual_norms(const MatrixF64& a, const VectorF64& x,
                             const VectorF64& z, double delta, double rho,
                             const NewtonDirection& dir, const NewtonRhs& rhs) {
  const int m = a.rows(), n = a.cols();
  ResidualNorms out;

  VectorF64 adx(m);
  kernels::matvec(a, dir.dx, adx);
  double acc = 0.0;
  for (int i = 0; i < m; ++i) {
    const double v = adx[i] + delta * dir.dy[i] - rhs.xi[i];
    acc += v * v;
  }
  out.r = std::sqrt(acc);

  VectorF64 aty(n);
  kernels::matvec_transpose(a, dir.dy, aty);
  acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const double v = -rho * dir.dx[j] + aty[j] + dir.dz[j] - rhs.zeta[j];
    acc += v * v;
  }
  out.s = std::sqrt(acc);

  acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const double v = z[j] * dir.dx[j] + x[j] * dir.dz[j] - rhs.eta[j];
    acc += v * v;
  }
  out.comp = std::sqrt(acc);
  return out;
}

}  // namespace mpip
