#pragma once

#include <optional>
#include <string>

#include "bfppc/common.hpp"
#include "bfppc/plant.hpp"
#include "bfppc/regulator.hpp"  // FeasibilityReport, ControlEval
#include "bfppc/signals.hpp"

namespace bfppc {

// Staged parameter schedule.  The index starts at 1 and moves up one stage
// the first time any error channel leaves its current threshold box; it
// never decreases and saturates at the last stage.
struct SwitchSchedule {
  std::vector<Vec> thresholds;  // [stage][channel], strictly increasing per channel
  std::vector<StageGains> stages;

  int stage_count() const { return static_cast<int>(stages.size()); }
  void validate(int n) const;
};

// Returns the updated stage index for the given errors.
int switch_update(const SwitchSchedule& sched, int sigma, std::span<const double> e);

// Tracking controller: each channel feeds back -k*e - M*tanh(M*e/eps)
// - c*e^N.  No virtual-control derivatives appear anywhere in the law.
struct TrackingControllerConfig {
  int n = 0;
  std::vector<PerformanceFunction> pf;  // one per channel
  ReferenceSignal reference = ReferenceSignal::constant(0.0);
  Vec x0;  // initial state, fixes the shaped offsets
  Vec eps;
  Vec p;       // target envelope radii (final-stage thresholds when switched)
  Vec F_star;  // worst-case bound constants (may be empty before synthesis)
  StageGains gains;                       // law in force when no schedule
  std::optional<SwitchSchedule> schedule;  // staged laws

  double a0() const { return std::abs(x0.at(0) - reference.value(0.0)); }
  const StageGains& stage(int sigma) const;
  const StageGains& final_stage() const;
  void validate() const;
};

// Evaluates the law with the parameters of the given stage index.
ControlEval tracking_control(const TrackingControllerConfig& cfg, int sigma,
                             std::span<const double> x, double t);

// Single-stage convenience overload.
ControlEval tracking_control(const TrackingControllerConfig& cfg,
                             std::span<const double> x, double t);

// Worst-case bound constants per channel, evaluated at the corner of the
// envelope box.  Positional arguments per channel i (1-based):
//   (sup rho_1..sup rho_i, rate bound x i, p_1..p_{i+1 (or n at i=n)},
//    Y0, Y1, a0, |x_2(0)|..|x_{i+1 (or n)}(0)|)
// The result carries the 1/gain_floor factor.
Vec f_star_from_bounds(const PlantModel& plant,
                       std::span<const PerformanceFunction> pf,
                       const ReferenceSignal& reference, std::span<const double> p,
                       std::span<const BoundFn> F0,
                       std::optional<double> rho_rate_bound = std::nullopt);

// Residual per channel of k*p + M + c*p^N - F_star - 0.3*eps/p, evaluated
// with the final-stage parameters; pass iff every residual is >= 0.
FeasibilityReport check_tracking_feasibility(const TrackingControllerConfig& cfg);

}  // namespace bfppc
