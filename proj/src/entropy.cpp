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

#include "gmc/entropy.hpp"

#include <cmath>

namespace gmc {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865476;
}

double gaussian_mass(int32_t symbol, double mean, double scale) {
  if (scale < kScaleMin) scale = kScaleMin;
  // Work with |s - mu| so that (s, mu) and (-s, -mu) take the identical
  // floating-point path; erfc on non-negative arguments avoids cancellation
  // in the tails.
  double d = std::fabs(double(symbol) - mean);
  double lo = (d - 0.5) * kInvSqrt2 / scale;
  double hi = (d + 0.5) * kInvSqrt2 / scale;
  return 0.5 * (std::erfc(lo) - std::erfc(hi));
}

double gaussian_bits(int32_t symbol, double mean, double scale) {
  double mass = gaussian_mass(symbol, mean, scale);
  if (mass < kProbFloor) mass = kProbFloor;
  return -std::log2(mass);
}

QuantizedLatent quantize(std::span<const double> values, Dims dims) {
  if (values.size() != dims.size())
    throw InputError("quantize: value count does not match dims");
  QuantizedLatent out;
  out.dims = dims;
  out.symbols.reserve(values.size());
  for (double v : values) {
    if (!std::isfinite(v)) throw InputError("quantize: non-finite input");
    out.symbols.push_back(round_half_away(v));
  }
  return out;
}

double estimate_rate(const QuantizedLatent& latent, const GaussianPrior& prior,
                     const SkipMask& mask) {
  if (latent.dims != prior.dims || latent.dims != mask.dims)
    throw InputError("estimate_rate: dims mismatch");
  double bits = 0.0;
  for (size_t i = 0; i < latent.symbols.size(); ++i)
    if (mask.bits[i])
      bits += gaussian_bits(latent.symbols[i], prior.mean[i], prior.scale[i]);
  return bits;
}

}  // namespace gmc
