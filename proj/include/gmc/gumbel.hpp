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

#ifndef GMC_GUMBEL_HPP_
#define GMC_GUMBEL_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "gmc/errors.hpp"

namespace gmc {

std::vector<double> softmax(std::span<const double> logits);

// Draws one Gumbel-softmax sample: softmax((logits + g) / temperature) with
// g i.i.d. standard Gumbel from the given seed. Output lies on the simplex
// and is reproducible per seed.
std::vector<double> gumbel_softmax(std::span<const double> logits,
                                   double temperature, uint64_t seed);

// Forward hardening for the straight-through estimator: one-hot(argmax),
// ties broken toward the lowest index. The training loop treats
// d(output)/d(probs) as the identity; see train_selector.
std::vector<double> straight_through(std::span<const double> probs);

size_t argmax_index(std::span<const double> values);

}  // namespace gmc

#endif  // GMC_GUMBEL_HPP_
