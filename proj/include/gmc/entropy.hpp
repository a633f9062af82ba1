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

#ifndef GMC_ENTROPY_HPP_
#define GMC_ENTROPY_HPP_

#include <span>
#include <vector>

#include "gmc/types.hpp"

namespace gmc {

// Probability mass of the unit interval [s-0.5, s+0.5] under N(mean, scale^2).
// Not floored; may underflow to 0 in the far tails.
double gaussian_mass(int32_t symbol, double mean, double scale);

// Code length of one symbol under the hyperprior model:
//   bits = -log2(max(mass, kProbFloor))
// Strictly positive and symmetric under (s,mu) -> (-s,-mu); saturates at
// -log2(kProbFloor) = 16 bits once the mass drops below the floor.
double gaussian_bits(int32_t symbol, double mean, double scale);

// Element-wise round-half-away-from-zero with saturation to the symbol
// alphabet. Rejects non-finite input.
QuantizedLatent quantize(std::span<const double> values, Dims dims);

// Sum of gaussian_bits over mask=1 elements; skipped elements cost nothing.
double estimate_rate(const QuantizedLatent& latent, const GaussianPrior& prior,
                     const SkipMask& mask);

}  // namespace gmc

#endif  // GMC_ENTROPY_HPP_
