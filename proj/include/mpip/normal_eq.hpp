#pragma once

#include <functional>
#include <string>
#include <utility>

#include "mpip/cholesky.hpp"
#include "mpip/matrix.hpp"

namespace mpip {

enum class SolveMode { mixed, double_precision };
const char* solve_mode_name(SolveMode mode);  // "mixed" / "double"

// Right-hand side of the regularized Newton system at the current iterate:
// xi = b - A x - delta (y - y^k), zeta = c + rho (x - x^k) - A^T y - z,
// eta = beta1 mu e - X z. At the iterate itself xi and zeta reduce to the
// primal and dual residuals.
struct NewtonRhs {
  VectorF64 xi;    // length m
  VectorF64 zeta;  // length n
  VectorF64 eta;   // length n
};

struct CgStats {
  int iterations = 0;
  double final_residual = 0.0;  // true residual norm at exit
  double seconds = 0.0;
  bool converged = false;
};

struct NewtonDirection {
  VectorF64 dx, dy, dz;
  double r_norm = 0.0;     // ||A dx + delta dy - xi||, a posteriori in float64
  double s_norm = 0.0;     // ||-rho dx + A^T dy + dz - zeta||
  double comp_norm = 0.0;  // ||Z dx + X dz - eta||
  int cg_iters = 0;
  SolveMode mode = SolveMode::mixed;
};

// D = X^{-1} Z + rho I and w = xi + A D^{-1}(zeta - X^{-1} eta), all float64,
// no m-by-m matrix formed. Throws std::domain_error if any x_i <= 0.
struct ScaledSystem {
  VectorF64 d;  // length n, diagonal of D
  VectorF64 w;  // length m
};
ScaledSystem assemble_rhs(const MatrixF64& a, const VectorF64& x,
                          const VectorF64& z, const NewtonRhs& rhs, double rho);

// Mixed-precision solve of (A D^{-1} A^T + delta I) dy = w: the normal matrix
// is formed and factored in float32 (with the c_m u_s diag shift), CG runs in
// float64 with the float32 factor as preconditioner and stops on the true
// residual. `ok == false` signals the caller to fall back to the double path
// (factorization breakdown after one 4x c_m retry, CG not converged within
// max_iters, or float32 overflow); partial stats are kept either way.
struct MixedSolve {
  bool ok = false;
  VectorF64 dy;
  CgStats cg;
  double build_seconds = 0.0;   // float32 conversion + scaling + syrk
  double factor_seconds = 0.0;  // shifted Cholesky (including a retry)
  std::string fallback_reason;
};
MixedSolve mixed_precision_solve(const MatrixF64& a, const VectorF64& d,
                                 const VectorF64& w, double delta, double c_m,
                                 double tol, int max_iters = 0 /* 0 -> 2m */);

// Full float64 path: forms M = A D^{-1} A^T + delta I, factors it with the
// c_m u_d shift (one 4x retry), solves, and applies one step of residual
// correction when the residual is out of proportion. Throws SolverFailure
// when the matrix is not numerically SPD even after the retry.
struct DirectSolve {
  VectorF64 dy;
  double build_seconds = 0.0;
  double factor_seconds = 0.0;
  bool refined = false;
};
DirectSolve double_precision_solve(const MatrixF64& a, const VectorF64& d,
                                   const VectorF64& w, double delta,
                                   double c_m);
// Same factorization, two right-hand sides (used by the starting point).
std::pair<DirectSolve, VectorF64> double_precision_solve_pair(
    const MatrixF64& a, const VectorF64& d, const VectorF64& w1,
    const VectorF64& w2, double delta, double c_m);

// Preconditioned CG with zero initial iterate. The recurrence residual drives
// the search directions, but termination tests the true residual w - op(x),
// recomputed every iteration. Returns the best iterate seen on
// non-convergence.
using LinearOperator = std::function<VectorF64(const VectorF64&)>;
std::pair<VectorF64, CgStats> pcg(const LinearOperator& op,
                                  const LinearOperator& precond,
                                  const VectorF64& w, double tol,
                                  int max_iters);

// dx = D^{-1}(A^T dy - zeta + X^{-1} eta); dz = zeta + rho dx - A^T dy.
// Recovering dz this way makes the second Newton block exact up to roundoff.
std::pair<VectorF64, VectorF64> recover_direction(
    const MatrixF64& a, const VectorF64& x, const VectorF64& z,
    const VectorF64& d, const VectorF64& dy, const VectorF64& zeta,
    const VectorF64& eta, double rho);

struct ResidualNorms {
  double r = 0.0;
  double s = 0.0;
  double comp = 0.0;
};
ResidualNorms residual_norms(const MatrixF64& a, const VectorF64& x,
                             const VectorF64& z, double delta, double rho,
                             const NewtonDirection& dir, const NewtonRhs& rhs);

}  // namespace mpip
