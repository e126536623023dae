#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bfppc/common.hpp"
#include "bfppc/signals.hpp"

namespace bfppc {

// Channel evaluator over (state prefix, time).
using DynamicsFn = std::function<double(std::span<const double>, double)>;

// One parameter stage of the polynomial + tanh tracking law.
struct StageGains {
  Vec k;
  Vec M;
  Vec c;
  std::vector<int> N;
};

// Strict-feedback plant: dx_i = f_i(x_1..x_i) + g_i(x_1..x_i) * x_{i+1},
// dx_n = f_n + g_n * u.  Majorant channels bound the uncertain parts:
// |f_i| <= f_star_i and gain_floor <= g_i <= g_star_i.
class PlantModel {
 public:
  PlantModel() = default;  // empty model; populate before use
  PlantModel(int order, std::vector<DynamicsFn> f, std::vector<DynamicsFn> g,
             std::vector<DynamicsFn> f_star, std::vector<DynamicsFn> g_star,
             double gain_floor, Vec x0);

  // Regulation form with g_i identically one.
  static PlantModel unity_gain(int order, std::vector<DynamicsFn> f,
                               std::vector<DynamicsFn> f_star, Vec x0);

  int order() const { return n_; }
  bool unity_gain_form() const { return unity_gain_; }
  double gain_floor() const { return g_m_; }
  const Vec& x0() const { return x0_; }
  bool has_majorants() const;

  double f(int channel, std::span<const double> x, double t) const;
  double g(int channel, std::span<const double> x, double t) const;
  double f_star(int channel, std::span<const double> x, double t) const;
  double g_star(int channel, std::span<const double> x, double t) const;

  Vec derivative(std::span<const double> x, double u, double t) const;

 private:
  int n_ = 0;
  bool unity_gain_ = false;
  double g_m_ = 1.0;
  Vec x0_;
  std::vector<DynamicsFn> f_, g_, f_star_, g_star_;
};

// Inputs needed to assemble the quantized-state regulation controller.
struct RegulationInputs {
  double l0 = 0.1;
  double delta0 = 0.05;
  PerformanceFunction pf = PerformanceFunction::cosine_taper(1.0);
  // Worst-case bound evaluators, one per stage.  Positional arguments:
  // (rho, rho_rate, |e_1|..|e_i|, |xq_1(0)|..|xq_min(i+1,n)(0)|, delta0).
  std::vector<BoundFn> H0;
  Vec H;  // frozen bound constants used by the published control law
  Vec gamma;
  Vec c;
  Vec eps;
  double c0 = 0.1;
  std::vector<int> N;
};

// Inputs needed to assemble the switched tracking controller.
struct TrackingInputs {
  std::vector<PerformanceFunction> pf;
  ReferenceSignal reference = ReferenceSignal::constant(0.0);
  int K = 1;
  std::vector<Vec> thresholds;  // [stage][channel]
  std::vector<StageGains> stages;
  Vec eps;
  // Worst-case bound evaluators, one per channel.  Positional arguments
  // follow the standard ordering (rho sups, rho rate sups, error radii,
  // Y0, Y1, a0, |x_2(0)|..).  The 1/gain_floor factor is applied by the
  // consumer, not baked in.
  std::vector<BoundFn> F0;
  // Rate bound fed into the evaluators; defaults to the performance
  // functions' own maximum when unset.
  std::optional<double> rho_rate_bound;
};

struct BuiltinScenario {
  std::string name;
  std::string summary;
  PlantModel plant;
  std::variant<RegulationInputs, TrackingInputs> controller;
};

// Bundled example systems: "example1" (quantized-state regulation) and
// "example2" (switched tracking).  Throws on unknown names.
BuiltinScenario builtin_scenario(const std::string& name);
std::vector<std::string> builtin_scenario_names();

}  // namespace bfppc
