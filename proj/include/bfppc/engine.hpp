#pragma once

#include <limits>
#include <optional>
#include <string>
#include <variant>

#include "bfppc/common.hpp"
#include "bfppc/plant.hpp"
#include "bfppc/quantizer.hpp"
#include "bfppc/regulator.hpp"
#include "bfppc/tracker.hpp"

namespace bfppc {

struct RegulationRun {
  QuantizerModel quantizer;
  RegulationControllerConfig config;
  // Stage bound evaluators, kept when the scenario provides them so gains
  // can be re-synthesized on demand.
  std::vector<BoundFn> stage_bounds;
};

struct TrackingRun {
  TrackingControllerConfig config;
};

// One closed-loop experiment: plant plus controller.
struct RunSpec {
  std::string name;
  PlantModel plant;
  std::variant<std::monostate, RegulationRun, TrackingRun> controller;

  bool is_regulation() const {
    return std::holds_alternative<RegulationRun>(controller);
  }
};

struct SimOptions {
  double step = 1e-4;
  double t_end = 10.0;
  // Skip the structural config validation (lets deliberately broken
  // parameter sets run so divergence handling can be exercised).
  bool force = false;
  // SampleHold freezes u across each step, matching a digital loop and
  // giving discontinuous quantized feedback a well-defined trajectory.
  // Continuous re-evaluates the law inside integrator stages and is only
  // meaningful for the smooth tracking law.
  enum class ControlMode { SampleHold, Continuous };
  ControlMode control = ControlMode::SampleHold;
  double divergence_threshold = 1e9;
};

struct SimEvent {
  std::size_t step_index = 0;
  double t = 0.0;
  std::string what;
};

// Uniformly sampled closed-loop record.  Column k of every row family
// belongs to grid time t[k]; u[k] is exactly the controller output at
// (qx[k] or x[k], t[k]) and was held over [t[k], t[k+1]) in sample-hold
// runs.
struct SimTrace {
  std::string scenario;
  std::string controller_kind;  // "regulation" | "tracking"
  int n = 0;
  double step = 0.0;
  bool sample_hold = true;

  Vec t;
  std::vector<Vec> x;      // [channel][sample]
  std::vector<Vec> qx;     // quantized states (copies x for tracking)
  std::vector<Vec> e;      // true errors
  std::vector<Vec> eq;     // quantized errors (copies e for tracking)
  std::vector<Vec> alpha;  // virtual controls, channels 1..n-1
  Vec u;
  std::vector<int> sigma;
  Vec rho;
  Vec env_lo, env_hi;
  Vec yd;  // tracking runs only; not part of the CSV layout

  Vec p_radii;  // envelope radii the run promises
  double delta_M = 0.0;

  bool diverged = false;
  double divergence_time = std::numeric_limits<double>::quiet_NaN();
  std::vector<SimEvent> events;

  std::size_t samples() const { return t.size(); }
};

using DerivativeFn = std::function<Vec(std::span<const double>, double)>;

// Classical fourth-order Runge-Kutta update.  Throws DivergenceError when
// an intermediate stage stops being finite.
Vec rk4_step(const DerivativeFn& deriv, std::span<const double> x, double t,
             double h);

// Runs the closed loop on a uniform grid.  Divergence does not throw: the
// partial trace comes back with the failure marker set.
SimTrace simulate(const RunSpec& spec, const SimOptions& opts = {});

struct ChannelStats {
  double max_abs_e = 0.0;
  std::optional<double> first_violation;  // first grid time |e_i| > p_i
  std::size_t quantizer_level_switches = 0;
};

struct TraceStats {
  std::vector<ChannelStats> channels;
  std::size_t sigma_switches = 0;
  double max_abs_u = 0.0;
};

TraceStats trace_stats(const SimTrace& trace);

}  // namespace bfppc
