// Copyright (c) the GMC Project Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GMC_TYPES_HPP_
#define GMC_TYPES_HPP_

#include <cmath>
#include <cstdint>
#include <vector>

#include "gmc/errors.hpp"

namespace gmc {

// Scales below this are clamped; avoids degenerate near-zero intervals.
inline constexpr double kScaleMin = 0.11;
// Minimum per-symbol probability; one count out of the 16-bit coder total.
inline constexpr double kProbFloor = 1.0 / 65536.0;
// Symbol alphabet is [-kSymbolMax, kSymbolMax]; quantization saturates.
inline constexpr int32_t kSymbolMax = (1 << 15) - 1;

struct Dims {
  uint32_t c = 0;
  uint32_t h = 0;
  uint32_t w = 0;

  size_t size() const { return size_t(c) * h * w; }
  bool operator==(const Dims&) const = default;
};

// Round-half-away-from-zero; the single rounding convention used by the
// quantizer and by skip-mode substitution.
inline int32_t round_half_away(double x) {
  double r = std::round(x);  // C round() is half-away-from-zero
  if (r > kSymbolMax) return kSymbolMax;
  if (r < -kSymbolMax) return -kSymbolMax;
  return static_cast<int32_t>(r);
}

// Integer latent tensor, row-major with channel outermost.
struct QuantizedLatent {
  Dims dims;
  std::vector<int32_t> symbols;

  void validate() const {
    if (symbols.size() != dims.size())
      throw InputError("latent size does not match dims");
  }
};

// Per-element mean/scale, same layout as the latent it governs.
struct GaussianPrior {
  Dims dims;
  std::vector<double> mean;
  std::vector<double> scale;

  // Clamps scales up to kScaleMin and rejects non-finite entries.
  void normalize() {
    if (mean.size() != dims.size() || scale.size() != dims.size())
      throw InputError("prior size does not match dims");
    for (size_t i = 0; i < mean.size(); ++i) {
      if (!std::isfinite(mean[i]) || !std::isfinite(scale[i]))
        throw InputError("prior contains non-finite values");
      if (scale[i] < kScaleMin) scale[i] = kScaleMin;
    }
  }
};

// Binary keep/skip decision per element: 1 = entropy-code, 0 = skip.
struct SkipMask {
  Dims dims;
  std::vector<uint8_t> bits;

  void validate() const {
    if (bits.size() != dims.size())
      throw InputError("mask size does not match dims");
    for (uint8_t b : bits)
      if (b > 1) throw InputError("mask values must be 0 or 1");
  }

  static SkipMask all_ones(Dims d) {
    return SkipMask{d, std::vector<uint8_t>(d.size(), 1)};
  }
  static SkipMask all_zeros(Dims d) {
    return SkipMask{d, std::vector<uint8_t>(d.size(), 0)};
  }
};

}  // namespace gmc

#endif  // GMC_TYPES_HPP_
