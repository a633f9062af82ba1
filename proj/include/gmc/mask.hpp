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

#ifndef GMC_MASK_HPP_
#define GMC_MASK_HPP_

#include <optional>
#include <string>
#include <variant>

#include "gmc/types.hpp"

namespace gmc {

// Skip-eligibility bound for the greedy policy: an element may be skipped
// only if substituting round(mean) changes the symbol by at most this much.
inline constexpr int32_t kGreedySkipErrorMax = 2;

// Keep every element whose prior scale is at least the threshold. Depends
// only on the prior, so encoder and decoder recompute the same mask and no
// mask bits need to be signaled (implicit mode).
struct ScaleThresholdPolicy {
  double threshold = 0.0;
};

// Keep elements in decreasing order of their coded cost until the kept-bit
// budget is reached. Reads the latent, so the mask must be transmitted
// (explicit mode).
struct GreedyUtilityPolicy {
  double bit_budget = 0.0;
};

// Mask supplied as a file (see mask file format below). Explicit mode.
struct ExternalMaskPolicy {
  std::string path;
};

using MaskPolicy =
    std::variant<ScaleThresholdPolicy, GreedyUtilityPolicy, ExternalMaskPolicy>;

// True when the policy is a function of the prior alone.
bool policy_is_implicit(const MaskPolicy& policy);

// Produces the skip mask for one tensor. Implicit policies never touch the
// latent; explicit policies require it (or the external file).
SkipMask decide_mask(const GaussianPrior& prior,
                     const std::optional<QuantizedLatent>& latent,
                     const MaskPolicy& policy);

// Kept elements unchanged; skipped elements become round(mean). Idempotent.
QuantizedLatent apply_skip(const QuantizedLatent& latent,
                           const GaussianPrior& prior, const SkipMask& mask);

// Mask file: three u32 little-endian dims, then bits packed row-major,
// MSB-first within each byte.
void save_mask(const SkipMask& mask, const std::string& path);
SkipMask load_mask(const std::string& path);
SkipMask load_mask_checked(const std::string& path, Dims expected);

// CSV dump for inspection: h rows by w columns of channel-averaged values.
std::string mask_to_csv(const SkipMask& mask);

// Command-line policy spec: "scale:<threshold>", "greedy:<bit_budget>" or
// "file:<path>".
MaskPolicy parse_mask_policy(const std::string& spec);

}  // namespace gmc

#endif  // GMC_MASK_HPP_
