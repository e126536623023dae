#pragma once

#include <optional>
#include <string>

#include "bfppc/common.hpp"

namespace bfppc {

enum class QuantizerKind { Uniform, HysteresisUniform, LogarithmicUniform };

QuantizerKind quantizer_kind_from_string(const std::string& s);
std::string to_string(QuantizerKind k);

// State quantizer with a guaranteed absolute error bound:
// |quantize(x) - x| <= bound() for every finite x of simulation magnitude.
//
// The uniform kind maps x to the nearest integer multiple of the interval
// length, ties rounded away from zero, so quantize(0) = 0 and the map is
// odd-symmetric and monotone.  The hysteresis kind keeps emitting the last
// level while the input stays within the bound of it, which suppresses
// level chatter near band edges; it carries per-channel memory and one
// instance must not be shared between concurrent runs.  The logarithmic-
// uniform kind is a stand-in that delegates to the uniform map; only the
// error-bound contract is normative for it.
class QuantizerModel {
 public:
  QuantizerModel(QuantizerKind kind, double interval_length,
                 std::optional<double> bound = std::nullopt);

  // Quantizes one value.  The channel index selects the hysteresis memory
  // slot and is ignored by the memoryless kinds.
  double quantize(double x, std::size_t channel = 0);

  // Channel-wise quantization of a state vector.
  Vec quantize_state(std::span<const double> x);

  void reset_memory();

  QuantizerKind kind() const { return kind_; }
  double interval_length() const { return l0_; }
  double bound() const { return delta0_; }

 private:
  double uniform_level(double x) const;

  QuantizerKind kind_;
  double l0_;
  double delta0_;
  std::vector<std::optional<double>> memory_;
};

}  // namespace bfppc
