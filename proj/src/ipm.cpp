#include "mpip/ipm.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mpip/kernels.hpp"

namespace mpip {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double min_element(const VectorF64& v) {
  double m = std::numeric_limits<double>::infinity();
  for (double x : v) m = std::min(m, x);
  return m;
}

Iterate advance(const Iterate& it, const NewtonDirection& dir, double alpha_p,
                double alpha_d) {
  Iterate next = it;
  const std::size_t n = it.x.size(), m = it.y.size();
  for (std::size_t j = 0; j < n; ++j) next.x[j] += alpha_p * dir.dx[j];
  for (std::size_t i = 0; i < m; ++i) next.y[i] += alpha_d * dir.dy[i];
  for (std::size_t j = 0; j < n; ++j) next.z[j] += alpha_d * dir.dz[j];
  next.k = it.k + 1;
  return next;
}

double frobenius(const MatrixF64& a) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a.data()[i] * a.data()[i];
  return std::sqrt(s);
}

void check(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

void SolverParams::validate() const {
  check(beta1 > 0 && beta1 < beta2 && beta2 < beta3 && beta3 < 1,
        "need 0 < beta1 < beta2 < beta3 < 1");
  check(beta4 > 0 && beta4 < 1, "need beta4 in (0,1)");
  check(gamma > 0 && gamma < 1, "need gamma in (0,1)");
  check(gamma_p > 0 && gamma_d > 0, "need gamma_p, gamma_d > 0");
  check(tau1 > 0 && tau1 <= 1 && tau2 > 0 && tau2 <= 1,
        "need tau1, tau2 in (0,1]");
  check(beta1 + tau1 - 1 > 0, "need beta1 + tau1 - 1 > 0");
  check(beta1 + tau2 - 1 > 0, "need beta1 + tau2 - 1 > 0");
  check(rho >= 0 && delta >= 0, "need rho, delta >= 0");
  check(!eps || *eps > 0, "eps must be positive");
  check(!eps_p || *eps_p > 0, "eps_p must be positive");
  check(!eps_d || *eps_d > 0, "eps_d must be positive");
  check(omega > 0, "omega must be positive");
  check(c_m > 0, "c_m must be positive");
  check(max_iterations >= 1, "max_iterations must be >= 1");
  check(switch_factor > 0, "switch_factor must be positive");
  check(!fixed_iterations || *fixed_iterations >= 1,
        "fixed_iterations must be >= 1");
}

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal:
      return "optimal";
    case SolveStatus::diverged:
      return "diverged";
    case SolveStatus::iteration_limit:
      return "iteration-limit";
    case SolveStatus::solver_failure:
      return "solver-failure";
  }
  return "?";
}

ResolvedTolerances resolve_tolerances(const StandardFormLP& lp,
                                      const SolverParams& params) {
  ResolvedTolerances t;
  t.eps = params.eps.value_or(1e-8 * lp.n);
  t.eps_p = params.eps_p.value_or(1e-8 * kernels::norm2(lp.b));
  t.eps_d = params.eps_d.value_or(1e-8 * kernels::norm2(lp.c));
  return t;
}

Iterate initial_point(const StandardFormLP& lp, double /*rho*/, double delta,
                      double c_m) {
  const int m = lp.m, n = lp.n;
  const VectorF64 ones(n, 1.0);
  VectorF64 ac(m);
  kernels::matvec(lp.a, lp.c, ac);

  // One factorization of A A^T + delta I serves both least-squares seeds.
  auto [ds, yt] =
      double_precision_solve_pair(lp.a, ones, lp.b, ac, delta, c_m);

  Iterate it;
  it.k = 0;
  it.x.resize(n);
  kernels::matvec_transpose(lp.a, ds.dy, it.x);  // x~ = A^T (AA^T+dI)^{-1} b
  it.y = std::move(yt);                          // y~ = (AA^T+dI)^{-1} A c
  it.z.resize(n);
  kernels::matvec_transpose(lp.a, it.y, it.z);
  for (int j = 0; j < n; ++j) it.z[j] = lp.c[j] - it.z[j];  // z~ = c - A^T y~

  const double shift_x = std::max(-1.5 * min_element(it.x), 0.0);
  const double shift_z = std::max(-1.5 * min_element(it.z), 0.0);
  VectorF64 xs(n), zs(n);
  for (int j = 0; j < n; ++j) xs[j] = it.x[j] + shift_x;
  for (int j = 0; j < n; ++j) zs[j] = it.z[j] + shift_z;

  const double ip = kernels::dot(xs, zs);
  if (ip == 0.0) {
    // All-zero data; the cross-term shifts below would divide by zero.
    it.x.assign(n, 1.0);
    it.z.assign(n, 1.0);
    it.y.assign(m, 0.0);
    return it;
  }

  double sum_xs = 0, sum_zs = 0;
  for (int j = 0; j < n; ++j) sum_xs += xs[j];
  for (int j = 0; j < n; ++j) sum_zs += zs[j];
  const double hat_x = shift_x + 0.5 * ip / sum_zs;
  const double hat_z = shift_z + 0.5 * ip / sum_xs;
  for (int j = 0; j < n; ++j) it.x[j] += hat_x;
  for (int j = 0; j < n; ++j) it.z[j] += hat_z;

  if (kernels::dot(it.x, it.z) == 0.0) {
    it.x.assign(n, 1.0);
    it.z.assign(n, 1.0);
    it.y.assign(m, 0.0);
  }
  return it;
}

bool is_solution(const Iterate& it, const StandardFormLP& lp, double eps,
                 double eps_p, double eps_d) {
  if (min_element(it.x) < 0 || min_element(it.z) < 0) return false;
  if (kernels::dot(it.x, it.z) > eps) return false;
  VectorF64 r(lp.m);
  kernels::matvec(lp.a, it.x, r);
  for (int i = 0; i < lp.m; ++i) r[i] -= lp.b[i];
  if (kernels::norm2(r) > eps_p) return false;
  VectorF64 s(lp.n);
  kernels::matvec_transpose(lp.a, it.y, s);
  for (int j = 0; j < lp.n; ++j) s[j] += it.z[j] - lp.c[j];
  return kernels::norm2(s) <= eps_d;
}

bool in_neighborhood(const Iterate& it, const StandardFormLP& lp, double gamma,
                     double gamma_p, double gamma_d, double eps_p,
                     double eps_d) {
  const int n = lp.n;
  if (!(min_element(it.x) > 0) || !(min_element(it.z) > 0)) return false;
  const double xz = kernels::dot(it.x, it.z);
  const double floor = gamma * xz / n;
  for (int j = 0; j < n; ++j)
    if (it.x[j] * it.z[j] < floor) return false;

  VectorF64 r(lp.m);
  kernels::matvec(lp.a, it.x, r);
  for (int i = 0; i < lp.m; ++i) r[i] -= lp.b[i];
  const double pres = kernels::norm2(r);
  if (!(xz >= gamma_p * pres || pres <= eps_p)) return false;

  VectorF64 s(n);
  kernels::matvec_transpose(lp.a, it.y, s);
  for (int j = 0; j < n; ++j) s[j] += it.z[j] - lp.c[j];
  const double dres = kernels::norm2(s);
  return xz >= gamma_d * dres || dres <= eps_d;
}

double max_step(const VectorF64& v, const VectorF64& dv) {
  if (v.size() != dv.size())
    throw std::invalid_argument("max_step: dimension mismatch");
  double alpha = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (dv[i] < 0.0) alpha = std::min(alpha, -v[i] / dv[i]);
  return alpha;
}

StepEvaluator::StepEvaluator(const Iterate& it, const NewtonDirection& dir,
                             const StandardFormLP& lp, double gamma,
                             double gamma_p, double gamma_d, double beta2)
    : n_(lp.n),
      gamma_(gamma),
      gamma_p_(gamma_p),
      gamma_d_(gamma_d),
      beta2_(beta2) {
  const int m = lp.m, n = lp.n;
  prod_xz_.resize(n);
  prod_cross_.resize(n);
  prod_dxdz_.resize(n);
  xz_ = cross_ = dxdz_ = 0;
  for (int j = 0; j < n; ++j) {
    prod_xz_[j] = it.x[j] * it.z[j];
    prod_cross_[j] = it.z[j] * dir.dx[j] + it.x[j] * dir.dz[j];
    prod_dxdz_[j] = dir.dx[j] * dir.dz[j];
    xz_ += prod_xz_[j];
    cross_ += prod_cross_[j];
    dxdz_ += prod_dxdz_[j];
  }

  pres0_.resize(m);
  pres1_.resize(m);
  kernels::matvec(lp.a, it.x, pres0_);
  for (int i = 0; i < m; ++i) pres0_[i] -= lp.b[i];
  kernels::matvec(lp.a, dir.dx, pres1_);

  dres0_.resize(n);
  dres1_.resize(n);
  kernels::matvec_transpose(lp.a, it.y, dres0_);
  for (int j = 0; j < n; ++j) dres0_[j] += it.z[j] - lp.c[j];
  kernels::matvec_transpose(lp.a, dir.dy, dres1_);
  for (int j = 0; j < n; ++j) dres1_[j] += dir.dz[j];
}

double StepEvaluator::complementarity(double alpha) const {
  return xz_ + alpha * cross_ + alpha * alpha * dxdz_;
}

FghValues StepEvaluator::eval(double alpha) const {
  FghValues v;
  const double s = complementarity(alpha);
  double fmin = std::numeric_limits<double>::infinity();
  const double centr = gamma_ * s / n_;
  for (int j = 0; j < n_; ++j) {
    const double pj = prod_xz_[j] + alpha * prod_cross_[j] +
                      alpha * alpha * prod_dxdz_[j];
    fmin = std::min(fmin, pj - centr);
  }
  v.f_min = fmin;

  double acc = 0;
  for (std::size_t i = 0; i < pres0_.size(); ++i) {
    const double r = pres0_[i] + alpha * pres1_[i];
    acc += r * r;
  }
  v.primal_res = std::sqrt(acc);
  acc = 0;
  for (std::size_t j = 0; j < dres0_.size(); ++j) {
    const double r = dres0_[j] + alpha * dres1_[j];
    acc += r * r;
  }
  v.dual_res = std::sqrt(acc);

  v.g_p = s - gamma_p_ * v.primal_res;
  v.g_d = s - gamma_d_ * v.dual_res;
  v.h = (1.0 - alpha * (1.0 - beta2_)) * xz_ - s;
  return v;
}

bool StepEvaluator::admissible(double alpha, double eps_p,
                               double eps_d) const {
  const FghValues v = eval(alpha);
  return v.f_min >= 0 && v.h >= 0 &&
         (v.g_p >= 0 || v.primal_res <= eps_p) &&
         (v.g_d >= 0 || v.dual_res <= eps_d);
}

FghValues fgh_eval(double alpha, const Iterate& it, const NewtonDirection& dir,
                   const StandardFormLP& lp, double gamma, double gamma_p,
                   double gamma_d, double beta2) {
  return StepEvaluator(it, dir, lp, gamma, gamma_p, gamma_d, beta2)
      .eval(alpha);
}

double alpha_bar(const Iterate& it, const NewtonDirection& dir,
                 const StandardFormLP& lp, const SolverParams& params,
                 double eps_p, double eps_d) {
  const StepEvaluator ev(it, dir, lp, params.gamma, params.gamma_p,
                         params.gamma_d, params.beta2);
  constexpr int kGrid = 64;
  constexpr int kBisections = 40;

  // The admissible set is a prefix interval of [0,1], so the first failing
  // grid point brackets its right end.
  double lo = 0.0, hi = -1.0;
  for (int j = 1; j <= kGrid; ++j) {
    const double a = static_cast<double>(j) / kGrid;
    if (!ev.admissible(a, eps_p, eps_d)) {
      hi = a;
      break;
    }
    lo = a;
  }
  if (hi > 0) {
    for (int i = 0; i < kBisections; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (ev.admissible(mid, eps_p, eps_d))
        lo = mid;
      else
        hi = mid;
    }
  }
  return lo * (1.0 - 1e-12);
}

StepOutcome take_step(const Iterate& it, const NewtonDirection& dir,
                      const StandardFormLP& lp, const SolverParams& params,
                      double eps_p, double eps_d) {
  StepOutcome out;
  out.record.alpha_star = 0.0;

  const double astar_p = std::min(max_step(it.x, dir.dx), 1.0);
  const double astar_d = std::min(max_step(it.z, dir.dz), 1.0);
  const double astar = std::min(astar_p, astar_d);
  out.record.alpha_star = astar;

  const double xz = kernels::dot(it.x, it.z);
  const double descent_bound = (1.0 - astar * (1.0 - params.beta3)) * xz;

  // Trial step of Remark-style shortcut: beta4 times the ratio test per
  // block, accepted when it stays in the neighborhood and descends at the
  // alpha* rate (which implies the alpha_bar rate).
  const double trial_p = std::min(params.beta4 * astar_p, 1.0);
  const double trial_d = std::min(params.beta4 * astar_d, 1.0);
  Iterate trial = advance(it, dir, trial_p, trial_d);
  if (in_neighborhood(trial, lp, params.gamma, params.gamma_p, params.gamma_d,
                      eps_p, eps_d) &&
      kernels::dot(trial.x, trial.z) <= descent_bound) {
    out.ok = true;
    out.next = std::move(trial);
    out.record.alpha_p = trial_p;
    out.record.alpha_d = trial_d;
    out.record.trial_accepted = true;
    return out;
  }

  const double abar = alpha_bar(it, dir, lp, params, eps_p, eps_d);
  out.record.abar = abar;
  if (!(abar > 0.0)) {
    out.stall_reason =
        "stall: trial step rejected and the admissible step length is zero; "
        "consider smaller regularization parameters";
    return out;
  }
  Iterate next = advance(it, dir, abar, abar);
  if (!(min_element(next.x) > 0) || !(min_element(next.z) > 0)) {
    out.stall_reason =
        "stall: the fallback step rounded out of the open orthant";
    return out;
  }
  out.ok = true;
  out.next = std::move(next);
  out.record.alpha_p = abar;
  out.record.alpha_d = abar;
  return out;
}

SolveResult solve(const StandardFormLP& lp, const SolverParams& params) {
  params.validate();
  if (lp.a.rows() != lp.m || lp.a.cols() != lp.n ||
      static_cast<int>(lp.b.size()) != lp.m ||
      static_cast<int>(lp.c.size()) != lp.n)
    throw std::invalid_argument("solve: inconsistent problem dimensions");

  const auto t_start = Clock::now();
  const ResolvedTolerances tol = resolve_tolerances(lp, params);
  const int m = lp.m, n = lp.n;

  SolveResult result;
  PolicyState policy;
  policy.switch_factor = params.switch_factor;
  if (params.mode == PrecisionMode::double_precision)
    policy.mode = SolveMode::double_precision;

  try {
    result.iterate = initial_point(lp, params.rho, params.delta, params.c_m);
  } catch (const std::exception& e) {
    result.status = SolveStatus::solver_failure;
    result.failure_reason = std::string("starting point failed: ") + e.what();
    result.seconds = seconds_since(t_start);
    return result;
  }
  Iterate& it = result.iterate;

  const double prim_den = std::max(kernels::norm2(lp.b), 1.0);
  const double dual_den = std::max(kernels::norm2(lp.c), 1.0);
  const double a_fro = params.check_invariants ? frobenius(lp.a) : 0.0;

  const bool stopping = !params.fixed_iterations.has_value();
  const int budget = params.fixed_iterations.value_or(params.max_iterations);

  VectorF64 xi(m), zeta(n);
  double pres = 0, dres = 0, xz = 0, mu = 0;
  const auto compute_residuals = [&] {
    kernels::matvec(lp.a, it.x, xi);
    for (int i = 0; i < m; ++i) xi[i] = lp.b[i] - xi[i];
    kernels::matvec_transpose(lp.a, it.y, zeta);
    for (int j = 0; j < n; ++j) zeta[j] = lp.c[j] - zeta[j] - it.z[j];
    xz = kernels::dot(it.x, it.z);
    mu = xz / n;
    pres = kernels::norm2(xi);
    dres = kernels::norm2(zeta);
  };
  const auto violation = [&](const std::string& what) {
    result.invariant_violations.push_back("iteration " + std::to_string(it.k) +
                                          ": " + what);
  };

  long cg_sum = 0;
  int mixed_dirs = 0;
  bool last_row_written = false;

  while (true) {
    const int k = it.k;
    const auto t_iter = Clock::now();
    compute_residuals();

    if (stopping) {
      if (min_element(it.x) >= 0 && min_element(it.z) >= 0 && xz <= tol.eps &&
          pres <= tol.eps_p && dres <= tol.eps_d) {
        result.status = SolveStatus::optimal;
        break;
      }
      if (kernels::norm1(it.x) + kernels::norm1(it.z) > params.omega) {
        result.status = SolveStatus::diverged;
        break;
      }
    }
    if (k >= budget) {
      result.status = SolveStatus::iteration_limit;
      break;
    }

    // Newton right-hand side at the iterate.
    NewtonRhs rhs;
    rhs.xi = xi;
    rhs.zeta = zeta;
    rhs.eta.resize(n);
    for (int j = 0; j < n; ++j)
      rhs.eta[j] = params.beta1 * mu - it.x[j] * it.z[j];

    ScaledSystem sys;
    try {
      sys = assemble_rhs(lp.a, it.x, it.z, rhs, params.rho);
    } catch (const std::exception& e) {
      result.status = SolveStatus::solver_failure;
      result.failure_reason = e.what();
      break;
    }
    const double cg_tol = std::max((1.0 - params.tau1) * pres,
                                   1e-16 * (1.0 + kernels::norm2(sys.w)));

    NewtonDirection dir;
    double t_build = 0, t_factor = 0, t_cg = 0;
    bool solved = false;
    if (policy.mode == SolveMode::mixed) {
      MixedSolve ms = mixed_precision_solve(lp.a, sys.d, sys.w, params.delta,
                                            params.c_m, cg_tol);
      t_build = ms.build_seconds;
      t_factor = ms.factor_seconds;
      t_cg = ms.cg.seconds;
      if (ms.ok) {
        dir.dy = std::move(ms.dy);
        dir.cg_iters = ms.cg.iterations;
        dir.mode = SolveMode::mixed;
        solved = true;
      } else {
        policy = switch_to_double(signal_fallback(policy), k);
        result.notes.push_back("iteration " + std::to_string(k) +
                               ": mixed path fell back to double (" +
                               ms.fallback_reason + ")");
      }
    }
    if (!solved) {
      try {
        DirectSolve dsv =
            double_precision_solve(lp.a, sys.d, sys.w, params.delta, params.c_m);
        dir.dy = std::move(dsv.dy);
        dir.mode = SolveMode::double_precision;
        t_build += dsv.build_seconds;
        t_factor += dsv.factor_seconds;
      } catch (const std::exception& e) {
        result.status = SolveStatus::solver_failure;
        result.failure_reason = e.what();
        break;
      }
    }

    auto [dx, dz] = recover_direction(lp.a, it.x, it.z, sys.d, dir.dy,
                                      rhs.zeta, rhs.eta, params.rho);
    dir.dx = std::move(dx);
    dir.dz = std::move(dz);
    const ResidualNorms rn =
        residual_norms(lp.a, it.x, it.z, params.delta, params.rho, dir, rhs);
    dir.r_norm = rn.r;
    dir.s_norm = rn.s;
    dir.comp_norm = rn.comp;
    ++result.iterations;
    if (dir.mode == SolveMode::mixed) {
      ++mixed_dirs;
      cg_sum += dir.cg_iters;
    }

    if (params.check_invariants) {
      if (dir.r_norm > cg_tol + 1e-8 * (1.0 + pres))
        violation("residual admissibility: ||r|| = " +
                  std::to_string(dir.r_norm) + " exceeds tol " +
                  std::to_string(cg_tol));
      const double s_scale = params.rho * kernels::norm2(dir.dx) +
                             a_fro * kernels::norm2(dir.dy) +
                             kernels::norm2(dir.dz) + kernels::norm2(zeta);
      if (dir.s_norm > 1e3 * kUnitRoundoffDouble * s_scale)
        violation("dual block not exact: ||s|| = " +
                  std::to_string(dir.s_norm));
    }

    StepRecord step_rec;
    bool optimal_full_step = false;
    if (stopping) {
      // Full step to the boundary of the ratio test may already be a
      // solution (Algorithm line-9 stop).
      const double astar =
          std::min(std::min(max_step(it.x, dir.dx), 1.0),
                   std::min(max_step(it.z, dir.dz), 1.0));
      Iterate candidate = advance(it, dir, astar, astar);
      if (is_solution(candidate, lp, tol.eps, tol.eps_p, tol.eps_d)) {
        step_rec.alpha_p = step_rec.alpha_d = step_rec.alpha_star = astar;
        it = std::move(candidate);
        result.status = SolveStatus::optimal;
        optimal_full_step = true;
      }
    }

    if (!optimal_full_step) {
      StepOutcome so = take_step(it, dir, lp, params, tol.eps_p, tol.eps_d);
      if (!so.ok) {
        if (!stopping) {
          // Fixed-iteration experiment runs record a zero step and continue.
          step_rec = so.record;
          step_rec.alpha_p = step_rec.alpha_d = 0.0;
          it.k = k + 1;
          result.notes.push_back("iteration " + std::to_string(k) + ": " +
                                 so.stall_reason + " (zero step recorded)");
        } else {
          result.status = SolveStatus::solver_failure;
          result.failure_reason = so.stall_reason;
          TraceRow row{k,
                       pres / prim_den,
                       dres / dual_den,
                       mu,
                       0.0,
                       0.0,
                       dir.cg_iters,
                       dir.mode,
                       t_build,
                       t_factor,
                       t_cg,
                       seconds_since(t_iter)};
          result.trace.append(row);
          if (params.iteration_callback) params.iteration_callback(row);
          last_row_written = true;
          break;
        }
      } else {
        if (params.check_invariants) {
          if (!in_neighborhood(so.next, lp, params.gamma, params.gamma_p,
                               params.gamma_d, tol.eps_p, tol.eps_d))
            violation("accepted iterate left the neighborhood");
          const double rate = so.record.trial_accepted
                                  ? so.record.alpha_star
                                  : so.record.abar.value_or(0.0);
          const double bound = (1.0 - rate * (1.0 - params.beta3)) * xz;
          if (kernels::dot(so.next.x, so.next.z) > bound * (1.0 + 1e-12))
            violation("complementarity descent bound violated");
          if (!(min_element(so.next.x) > 0) || !(min_element(so.next.z) > 0))
            violation("strict interiority lost");
          if (so.record.abar && !(*so.record.abar < so.record.alpha_star))
            violation("alpha_bar not strictly below alpha_star");
        }
        step_rec = so.record;
        it = std::move(so.next);
      }
    }

    TraceRow row{k,
                 pres / prim_den,
                 dres / dual_den,
                 mu,
                 step_rec.alpha_p,
                 step_rec.alpha_d,
                 dir.cg_iters,
                 dir.mode,
                 t_build,
                 t_factor,
                 t_cg,
                 seconds_since(t_iter)};
    result.trace.append(row);
    if (params.iteration_callback) params.iteration_callback(row);

    // Timing bookkeeping for the switch heuristic, after the step so the
    // current iteration keeps the mode it actually used.
    if (dir.mode == SolveMode::mixed && policy.mode == SolveMode::mixed) {
      policy = record_mixed_iteration(policy, t_build + t_factor, t_cg);
      if (params.mode == PrecisionMode::auto_switch && should_switch(policy))
        policy = switch_to_double(policy, k + 1);
    }

    if (optimal_full_step) break;
  }

  if (!last_row_written &&
      (result.trace.rows.empty() || result.trace.rows.back().k < it.k)) {
    compute_residuals();
    TraceRow row{it.k, pres / prim_den, dres / dual_den, mu, 0.0, 0.0, 0,
                 policy.mode, 0.0, 0.0, 0.0, 0.0};
    result.trace.append(row);
    if (params.iteration_callback) params.iteration_callback(row);
  }

  result.objective = kernels::dot(lp.c, it.x);
  result.k_switch = policy.k_switch;
  result.mean_cg_iterations =
      mixed_dirs > 0 ? static_cast<double>(cg_sum) / mixed_dirs : 0.0;
  result.seconds = seconds_since(t_start);
  return result;
}

}  // namespace mpip
