#include "mpip/policy.hpp"

#include <stdexcept>

namespace mpip {

PolicyState record_mixed_iteration(PolicyState state,
                                   double build_factor_seconds,
                                   double cg_seconds) {
  if (state.mode != SolveMode::mixed)
    throw std::logic_error(
        "record_mixed_iteration called after the switch to double");
  if (build_factor_seconds < 0.0 || cg_seconds < 0.0)
    throw std::invalid_argument("iteration times must be nonnegative");
  state.avg_build_factor_seconds =
      (state.avg_build_factor_seconds * state.samples + build_factor_seconds) /
      (state.samples + 1);
  ++state.samples;
  state.last_cg_seconds = cg_seconds;
  return state;
}

PolicyState signal_fallback(PolicyState state) {
  state.fallback_signaled = true;
  return state;
}

bool should_switch(const PolicyState& state) {
  if (state.fallback_signaled) return true;
  if (state.samples < 1)
    throw std::logic_error("should_switch needs at least one recorded sample");
  return state.last_cg_seconds >
         state.switch_factor * state.avg_build_factor_seconds;
}

PolicyState switch_to_double(PolicyState state, int iteration) {
  if (state.mode == SolveMode::mixed) {
    state.mode = SolveMode::double_precision;
    if (!state.k_switch) state.k_switch = iteration;
  }
  return state;
}

}  // namespace mpip
