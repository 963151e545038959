#pragma once

#include <functional>
#include <optional>
#include <string>

#include "mpip/normal_eq.hpp"
#include "mpip/policy.hpp"
#include "mpip/standard_form.hpp"
#include "mpip/trace.hpp"

namespace mpip {

enum class PrecisionMode {
  mixed,             // mixed path for the whole run; double only on hard failure
  double_precision,  // float64 path from the start
  auto_switch        // mixed plus the runtime switch heuristic
};

struct SolverParams {
  double beta1 = 0.1;    // centering
  double beta2 = 0.9;    // per-step complementarity decrease inside alpha_bar
  double beta3 = 0.95;   // accepted-step decrease
  double beta4 = 0.99995;  // trial step fraction of the ratio test
  double gamma = 1e-8;
  double gamma_p = 1e-8;
  double gamma_d = 1e-8;
  double tau1 = 0.95;  // requires beta1 + tau1 - 1 > 0
  double tau2 = 1.0;
  double rho = 1e-10;    // primal regularization
  double delta = 1e-10;  // dual regularization
  // Absolute tolerances; unset means the scale defaults 1e-8 n, 1e-8 ||b||,
  // 1e-8 ||c||.
  std::optional<double> eps, eps_p, eps_d;
  double omega = 1e40;
  double c_m = 30.0;
  int max_iterations = 300;
  double switch_factor = 0.75;
  PrecisionMode mode = PrecisionMode::auto_switch;
  // Run exactly this many iterations with both stopping tests disabled
  // (experiment harness); stalls record a zero step instead of failing.
  std::optional<int> fixed_iterations;
  // Check the per-iteration invariants and collect violations in the result.
  bool check_invariants = false;
  std::function<void(const TraceRow&)> iteration_callback;

  void validate() const;  // throws std::invalid_argument
};

struct Iterate {
  VectorF64 x, y, z;
  int k = 0;
};

enum class SolveStatus { optimal, diverged, iteration_limit, solver_failure };
const char* status_name(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::solver_failure;
  Iterate iterate;
  double objective = 0.0;  // c^T x of the standard form
  int iterations = 0;      // directions computed
  std::optional<int> k_switch;
  double mean_cg_iterations = 0.0;  // over mixed-mode iterations
  double seconds = 0.0;
  std::string failure_reason;
  ConvergenceTrace trace;
  std::vector<std::string> invariant_violations;
  std::vector<std::string> notes;  // fallback events and similar
};

struct ResolvedTolerances {
  double eps, eps_p, eps_d;
};
ResolvedTolerances resolve_tolerances(const StandardFormLP& lp,
                                      const SolverParams& params);

// Least-squares starting point with the delta I modification so rank
// deficient A is handled; positivity shifts as in the classic recipe. Falls
// back to (e, 0, e) when the shifted point has x0^T z0 == 0 (all-zero data).
Iterate initial_point(const StandardFormLP& lp, double rho, double delta,
                      double c_m);

// (x, z) >= 0, x^T z <= eps, ||Ax - b|| <= eps_p, ||A^T y + z - c|| <= eps_d.
bool is_solution(const Iterate& it, const StandardFormLP& lp, double eps,
                 double eps_p, double eps_d);

// Central-path neighborhood membership: strict positivity, centrality
// x_i z_i >= gamma x^T z / n, and the residual-vs-complementarity disjuncts.
bool in_neighborhood(const Iterate& it, const StandardFormLP& lp, double gamma,
                     double gamma_p, double gamma_d, double eps_p,
                     double eps_d);

// Largest alpha with v + alpha dv >= 0; +inf when unblocked.
double max_step(const VectorF64& v, const VectorF64& dv);

struct FghValues {
  double f_min;        // min_i f_i(alpha)
  double g_p;
  double g_d;
  double h;
  double primal_res;   // ||A(x + alpha dx) - b||
  double dual_res;     // ||A^T(y + alpha dy) + z + alpha dz - c||
};

// Precomputes the quadratic expansions of the products and the affine
// expansions of the residuals so that evaluating the step functions at many
// alphas costs O(n + m) each.
class StepEvaluator {
 public:
  StepEvaluator(const Iterate& it, const NewtonDirection& dir,
                const StandardFormLP& lp, double gamma, double gamma_p,
                double gamma_d, double beta2);
  FghValues eval(double alpha) const;
  // All of (eq. f_i >= 0, h >= 0) plus the residual disjuncts at one alpha.
  bool admissible(double alpha, double eps_p, double eps_d) const;
  double complementarity(double alpha) const;  // (x+a dx)^T (z+a dz)

 private:
  int n_;
  double gamma_, gamma_p_, gamma_d_, beta2_;
  double xz_, cross_, dxdz_;
  VectorF64 prod_xz_, prod_cross_, prod_dxdz_;
  VectorF64 pres0_, pres1_;  // primal residual = pres0 + alpha pres1
  VectorF64 dres0_, dres1_;
};

FghValues fgh_eval(double alpha, const Iterate& it, const NewtonDirection& dir,
                   const StandardFormLP& lp, double gamma, double gamma_p,
                   double gamma_d, double beta2);

// Largest alpha in [0,1] admissible on the whole prefix [0, alpha]: scans a
// 64-point uniform grid for the first failure, bisects the bracket 40 times,
// and shrinks the result by (1 - 1e-12) to stay strictly inside.
double alpha_bar(const Iterate& it, const NewtonDirection& dir,
                 const StandardFormLP& lp, const SolverParams& params,
                 double eps_p, double eps_d);

struct StepRecord {
  double alpha_p = 0.0;
  double alpha_d = 0.0;
  double alpha_star = 0.0;   // min of the 1-capped ratio tests
  std::optional<double> abar;  // set when the fallback step was computed
  bool trial_accepted = false;
};

struct StepOutcome {
  bool ok = false;
  Iterate next;
  StepRecord record;
  std::string stall_reason;
};

// Trial step beta4 * alpha^* per block; if the trial iterate stays in the
// neighborhood and satisfies the descent bound with alpha^*, accept it,
// otherwise fall back to the common step alpha_bar.
StepOutcome take_step(const Iterate& it, const NewtonDirection& dir,
                      const StandardFormLP& lp, const SolverParams& params,
                      double eps_p, double eps_d);

SolveResult solve(const StandardFormLP& lp, const SolverParams& params);

}  // namespace mpip
