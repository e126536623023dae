#pragma once

#include <string>
#include <utility>

#include "bfppc/common.hpp"
#include "bfppc/plant.hpp"
#include "bfppc/quantizer.hpp"
#include "bfppc/signals.hpp"

namespace bfppc {

// Quantized-state regulation controller.
//
// Error coordinates are built from quantized measurements against a shaped
// descent of the quantized initial state; each stage feeds back a linear
// term gamma*H*e plus an odd polynomial c*e^N.  H holds per-stage constants
// that upper bound the uncertain terms on the invariant error box, frozen
// at their worst case so the law needs no online bound evaluation.
struct RegulationControllerConfig {
  int n = 0;
  Vec gamma;
  Vec c;
  std::vector<int> N;
  Vec H;       // frozen per-stage bound constants
  Vec H_star;  // bound evaluators at the all-zero argument (empty if unknown)
  Vec eps;
  double c0 = 0.0;
  double delta_M = 0.0;  // quantization mismatch ceiling, >= (1+rho)*delta0
  Vec q_x0;              // quantized initial state
  PerformanceFunction pf = PerformanceFunction::cosine_taper(1.0);

  // Control mismatch radii (delta_1..delta_n) and envelope radii
  // (p_1..p_n) from the forward recursion.
  Vec mismatch_radii() const;
  Vec envelope_radii() const;

  // Structural sanity: positive gains, odd powers >= 3, consistent sizes.
  void validate() const;
};

struct ControlEval {
  Vec e;      // error coordinates
  Vec alpha;  // virtual controls, alpha[n-1] == u
  double u = 0.0;
};

// Evaluates the control law on quantized measurements at time t.
// Finite output for every finite input; no barrier terms anywhere.
ControlEval regulation_control(const RegulationControllerConfig& cfg,
                               std::span<const double> q_x, double t);

// Same law on true (unquantized) errors; diagnostic companion used to
// reconstruct the invariant-set coordinates along a trace.
ControlEval regulation_control_true(const RegulationControllerConfig& cfg,
                                    std::span<const double> x, double t,
                                    std::span<const double> x0_true);

// Positional argument vector expected by the stage bound evaluators:
// (rho, rho_rate, |e_1|..|e_i|, |xq_1(0)|..|xq_min(i+1,n)(0)|, delta0).
Vec stage_bound_args(int stage, int n, double rho, double rho_rate,
                     std::span<const double> e_abs,
                     std::span<const double> q_x0_abs, double delta0);

// Derives gains from the feasibility inequalities: c at its upper bound,
// gamma 5% above its lower bound, stage bounds frozen at their worst case
// over the envelope box.  The result always passes
// check_regulation_feasibility.
RegulationControllerConfig synthesize_regulation(
    const PlantModel& plant, const QuantizerModel& quantizer,
    const PerformanceFunction& pf, std::span<const BoundFn> H0, Vec eps,
    double c0, std::vector<int> N, Vec q_x0);

struct FeasibilityLine {
  std::string label;
  double residual = 0.0;  // satisfied iff >= 0 (strict: > 0)
  bool strict = false;
  bool ok = false;
};

struct FeasibilityReport {
  std::vector<FeasibilityLine> lines;
  bool pass = false;
  std::string note;
};

// Residuals of the four inequality groups that certify the invariant set.
// Upper-bound lines on c are satisfied at >= 0; lower-bound lines on gamma
// must be strictly positive.
FeasibilityReport check_regulation_feasibility(const RegulationControllerConfig& cfg);

// Guaranteed output corridor rho(t)*x1_initial +/- (delta_M + eps_1).
std::pair<double, double> output_envelope(const RegulationControllerConfig& cfg,
                                          double x1_initial, double t);

}  // namespace bfppc
