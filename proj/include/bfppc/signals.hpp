#pragma once

#include <string>

#include "bfppc/common.hpp"
#include "bfppc/expression.hpp"

namespace bfppc {

// Nonincreasing envelope shape rho(t) with rho(0) = 1 and bounded slope.
//
// Two families are provided:
//   cosine taper   (1 + cos(t/ts))/2 until t = pi*ts, then 0
//   exponential    (1 - rho1) * exp(-rho0*t) + rho1
class PerformanceFunction {
 public:
  enum class Family { CosineTaper, Exponential };

  static PerformanceFunction cosine_taper(double t_s);
  static PerformanceFunction exponential(double rho0, double rho1);

  double rho(double t) const;
  double rho_dot(double t) const;

  double rho_max() const { return 1.0; }
  double rho_dot_max() const;

  Family family() const { return family_; }
  double t_s() const { return t_s_; }
  double rho0() const { return rho0_; }
  double rho1() const { return rho1_; }
  std::string describe() const;

 private:
  PerformanceFunction() = default;
  Family family_ = Family::CosineTaper;
  double t_s_ = 1.0;
  double rho0_ = 1.0;
  double rho1_ = 0.1;
};

// Reference trajectory with known magnitude and rate bounds.
class ReferenceSignal {
 public:
  static ReferenceSignal constant(double value);
  static ReferenceSignal sinusoid(double amplitude, double omega);
  // Bounds for expression references come from a grid maximum over
  // [0, horizon] padded by 5%; the derivative is a central difference.
  static ReferenceSignal expression(Expression expr, double horizon);

  double value(double t) const;
  double derivative(double t) const;

  double max_value_bound() const { return y0_; }  // |y_d| <= Y0
  double max_rate_bound() const { return y1_; }   // |y_d'| <= Y1

  std::string describe() const;

 private:
  ReferenceSignal() = default;
  enum class Kind { Constant, Sinusoid, Expr };
  Kind kind_ = Kind::Constant;
  double value_ = 0.0;
  double amplitude_ = 0.0;
  double omega_ = 0.0;
  Expression expr_;
  double y0_ = 0.0;
  double y1_ = 0.0;
};

}  // namespace bfppc
