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

#include "gmc/gumbel.hpp"

#include <cmath>

#include "gmc/rng.hpp"

namespace gmc {

std::vector<double> softmax(std::span<const double> logits) {
  if (logits.empty()) throw InputError("softmax: empty input");
  double m = logits[0];
  for (double v : logits) {
    if (!std::isfinite(v)) throw InputError("softmax: non-finite logit");
    if (v > m) m = v;
  }
  std::vector<double> out(logits.size());
  double sum = 0.0;
  for (size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - m);
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

std::vector<double> gumbel_softmax(std::span<const double> logits,
                                   double temperature, uint64_t seed) {
  if (!(temperature > 0.0))
    throw InputError("gumbel_softmax: temperature must be > 0");
  SplitMix rng(seed);
  std::vector<double> perturbed(logits.size());
  for (size_t i = 0; i < logits.size(); ++i) {
    if (!std::isfinite(logits[i]))
      throw InputError("gumbel_softmax: non-finite logit");
    double g = -std::log(-std::log(rng.uniform()));
    perturbed[i] = (logits[i] + g) / temperature;
  }
  return softmax(perturbed);
}

size_t argmax_index(std::span<const double> values) {
  size_t best = 0;
  for (size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[best]) best = i;
  return best;
}

std::vector<double> straight_through(std::span<const double> probs) {
  if (probs.empty()) throw InputError("straight_through: empty input");
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw InputError("straight_through: negative entry");
    sum += p;
  }
  if (std::fabs(sum - 1.0) > 1e-6)
    throw InputError("straight_through: input not on the simplex");
  std::vector<double> out(probs.size(), 0.0);
  out[argmax_index(probs)] = 1.0;
  return out;
}

}  // namespace gmc
