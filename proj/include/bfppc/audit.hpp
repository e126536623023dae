#pragma once

#include <cstdint>
#include <string>

#include "bfppc/common.hpp"
#include "bfppc/engine.hpp"
#include "bfppc/quantizer.hpp"
#include "bfppc/regulator.hpp"

namespace bfppc {

struct AxisGrid {
  double lo = 0.0;
  double hi = 1.0;
  int points = 21;
};

// Result of one numerical check.  These are sampling audits over the
// stated grid, not proofs: pass means no violation at any sampled point.
struct AuditReport {
  std::string check;
  std::string domain;
  double worst_residual = 0.0;
  Vec worst_location;
  bool pass = false;
  std::string note;
};

// Checks that F is positive and nondecreasing in every argument on the
// grid lattice (central finite differences at interior points, slope
// tolerance -1e-9).  When F vanishes at the all-zero corner that corner is
// excluded from the positivity sweep and reported in the note.  Lattices
// larger than max_points are subsampled deterministically.
AuditReport check_w_function(const BoundFn& F, std::span<const AxisGrid> axes,
                             std::uint64_t max_points = 200000);

// Checks lhs >= rhs at every grid point; worst_residual is min(lhs - rhs).
AuditReport audit_majorization(const BoundFn& lhs, const BoundFn& rhs,
                               std::span<const AxisGrid> axes,
                               std::uint64_t max_points = 200000);

// Checks max over e of M|e| - M*e*tanh(M*e/eps) <= 0.3*eps on a symmetric
// grid spanning [-span_scale*eps/M, span_scale*eps/M].
AuditReport tanh_bound_check(double M, double eps, int points = 100001,
                             double span_scale = 10.0);

// Containment of every error channel in its envelope radius, plus an
// independent recomputation of the output-form corridor from x1, the
// shaped reference and rho.  One report per channel plus one for the
// output form.
std::vector<AuditReport> verify_envelope(const SimTrace& trace,
                                         std::span<const double> p);

struct PpcControl {
  double value = 0.0;
  bool singular = false;
};

// Classical log-ratio funnel law -k*ln((1+e/rho)/(1-e/rho)).  Returns the
// singular marker instead of a value once |e/rho| >= 1; never traps.
PpcControl ppc_reference_control(double k, double rho_val, double e);

struct SingularityDemo {
  bool found = false;
  double rho = 0.0;
  double x1 = 0.0;
  double e_quantized = 0.0;
  double e_true = 0.0;
  PpcControl funnel;
  double finite_control = 0.0;
  bool pass = false;  // funnel singular while the polynomial law is finite
};

// Sweeps true outputs through the quantizer at small rho values until a
// reachable quantized error defeats the log-ratio law while the
// polynomial law stays finite.
SingularityDemo barrier_singularity_demo(const RegulationControllerConfig& cfg,
                                         QuantizerModel quantizer);

}  // namespace bfppc
