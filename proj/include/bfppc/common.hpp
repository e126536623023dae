#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bfppc {

using Vec = std::vector<double>;

// Bound evaluator over a positional list of nonnegative arguments.
// Used for the worst-case majorant functions consumed by the gain
// synthesis and the audit checks.
using BoundFn = std::function<double(std::span<const double>)>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A state, control or intermediate quantity stopped being finite.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, double time)
      : Error(what), time_(time) {}
  double time() const { return time_; }

 private:
  double time_ = 0.0;
};

inline bool all_finite(std::span<const double> v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

// Odd integer >= 3, the admissible polynomial feedback powers.
inline bool is_odd_power(int n) { return n >= 3 && n % 2 == 1; }

// x^n for small nonnegative integer n.
inline double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace bfppc
