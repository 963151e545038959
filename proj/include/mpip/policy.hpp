#pragma once

#include <optional>

#include "mpip/normal_eq.hpp"

namespace mpip {

// Per-solve state of the precision switch heuristic: the solver starts on the
// mixed-precision path and moves to full double precision as soon as the CG
// time exceeds switch_factor times the running average of the float32 build +
// factorization time, or immediately on a fallback signal. Once in double
// mode it never reverts.
struct PolicyState {
  SolveMode mode = SolveMode::mixed;
  double avg_build_factor_seconds = 0.0;
  double last_cg_seconds = 0.0;
  int samples = 0;
  bool fallback_signaled = false;
  std::optional<int> k_switch;  // first double-mode iteration, set once
  double switch_factor = 0.75;
};

// Folds one mixed-mode iteration's timings into the running average
// (arithmetic mean over all mixed iterations so far). Requires mixed mode and
// nonnegative times.
PolicyState record_mixed_iteration(PolicyState state,
                                   double build_factor_seconds,
                                   double cg_seconds);

// Marks a hard failure of the mixed path (breakdown, CG stall, overflow).
PolicyState signal_fallback(PolicyState state);

// True when the last CG time exceeded switch_factor times the running
// average, or a fallback was signaled. Needs at least one recorded sample
// unless a fallback forced the answer.
bool should_switch(const PolicyState& state);

// Transition to double mode, recording iteration as k_switch exactly once.
PolicyState switch_to_double(PolicyState state, int iteration);

}  // namespace mpip
