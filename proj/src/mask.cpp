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

#include "gmc/mask.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "gmc/entropy.hpp"

namespace gmc {

bool policy_is_implicit(const MaskPolicy& policy) {
  return std::holds_alternative<ScaleThresholdPolicy>(policy);
}

namespace {

SkipMask scale_threshold_mask(const GaussianPrior& prior, double threshold) {
  SkipMask mask;
  mask.dims = prior.dims;
  mask.bits.resize(prior.dims.size());
  for (size_t i = 0; i < mask.bits.size(); ++i)
    mask.bits[i] = prior.scale[i] >= threshold ? 1 : 0;
  return mask;
}

SkipMask greedy_utility_mask(const GaussianPrior& prior,
                             const QuantizedLatent& latent,
                             double bit_budget) {
  size_t n = prior.dims.size();
  std::vector<double> cost(n);
  std::vector<uint8_t> eligible(n);
  for (size_t i = 0; i < n; ++i) {
    cost[i] = gaussian_bits(latent.symbols[i], prior.mean[i], prior.scale[i]);
    int32_t err = latent.symbols[i] - round_half_away(prior.mean[i]);
    eligible[i] = std::abs(err) <= kGreedySkipErrorMax;
  }

  SkipMask mask = SkipMask::all_zeros(prior.dims);
  double used = 0.0;
  // Ineligible elements would be too damaged by substitution; always keep.
  for (size_t i = 0; i < n; ++i) {
    if (!eligible[i]) {
      mask.bits[i] = 1;
      used += cost[i];
    }
  }

  std::vector<size_t> order;
  order.reserve(n);
  for (size_t i = 0; i < n; ++i)
    if (eligible[i]) order.push_back(i);
  std::sort(order.begin(), order.end(), [&cost](size_t a, size_t b) {
    if (cost[a] != cost[b]) return cost[a] > cost[b];
    return a < b;
  });
  for (size_t i : order) {
    if (used + cost[i] > bit_budget) continue;
    mask.bits[i] = 1;
    used += cost[i];
  }
  return mask;
}

}  // namespace

SkipMask decide_mask(const GaussianPrior& prior,
                     const std::optional<QuantizedLatent>& latent,
                     const MaskPolicy& policy) {
  if (const auto* st = std::get_if<ScaleThresholdPolicy>(&policy))
    return scale_threshold_mask(prior, st->threshold);

  if (const auto* gu = std::get_if<GreedyUtilityPolicy>(&policy)) {
    if (!latent)
      throw InputError("greedy mask policy requires the latent");
    if (latent->dims != prior.dims)
      throw InputError("decide_mask: dims mismatch");
    return greedy_utility_mask(prior, *latent, gu->bit_budget);
  }

  const auto& ext = std::get<ExternalMaskPolicy>(policy);
  return load_mask_checked(ext.path, prior.dims);
}

QuantizedLatent apply_skip(const QuantizedLatent& latent,
                           const GaussianPrior& prior, const SkipMask& mask) {
  if (latent.dims != prior.dims || latent.dims != mask.dims)
    throw InputError("apply_skip: dims mismatch");
  QuantizedLatent out = latent;
  for (size_t i = 0; i < out.symbols.size(); ++i)
    if (!mask.bits[i]) out.symbols[i] = round_half_away(prior.mean[i]);
  return out;
}

void save_mask(const SkipMask& mask, const std::string& path) {
  mask.validate();
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open mask file for writing: " + path);
  auto put_u32 = [&f](uint32_t v) {
    uint8_t b[4] = {uint8_t(v), uint8_t(v >> 8), uint8_t(v >> 16),
                    uint8_t(v >> 24)};
    f.write(reinterpret_cast<const char*>(b), 4);
  };
  put_u32(mask.dims.c);
  put_u32(mask.dims.h);
  put_u32(mask.dims.w);
  uint8_t acc = 0;
  int filled = 0;
  for (uint8_t bit : mask.bits) {
    acc = uint8_t(acc << 1 | (bit & 1));
    if (++filled == 8) {
      f.put(char(acc));
      acc = 0;
      filled = 0;
    }
  }
  if (filled) f.put(char(acc << (8 - filled)));
  if (!f) throw InputError("failed writing mask file: " + path);
}

SkipMask load_mask(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open mask file: " + path);
  auto get_u32 = [&f, &path]() {
    uint8_t b[4];
    if (!f.read(reinterpret_cast<char*>(b), 4))
      throw InputError("truncated mask file: " + path);
    return uint32_t(b[0]) | uint32_t(b[1]) << 8 | uint32_t(b[2]) << 16 |
           uint32_t(b[3]) << 24;
  };
  SkipMask mask;
  mask.dims = Dims{get_u32(), get_u32(), get_u32()};
  size_t n = mask.dims.size();
  mask.bits.resize(n);
  size_t nbytes = (n + 7) / 8;
  std::vector<uint8_t> packed(nbytes);
  if (!f.read(reinterpret_cast<char*>(packed.data()),
              std::streamsize(nbytes)))
    throw InputError("truncated mask file: " + path);
  for (size_t i = 0; i < n; ++i)
    mask.bits[i] = (packed[i / 8] >> (7 - i % 8)) & 1;
  return mask;
}

SkipMask load_mask_checked(const std::string& path, Dims expected) {
  SkipMask mask = load_mask(path);
  if (mask.dims != expected)
    throw InputError("external mask dims do not match tensor dims: " + path);
  return mask;
}

std::string mask_to_csv(const SkipMask& mask) {
  std::ostringstream out;
  size_t plane = size_t(mask.dims.h) * mask.dims.w;
  for (uint32_t y = 0; y < mask.dims.h; ++y) {
    for (uint32_t x = 0; x < mask.dims.w; ++x) {
      double sum = 0.0;
      for (uint32_t ch = 0; ch < mask.dims.c; ++ch)
        sum += mask.bits[ch * plane + size_t(y) * mask.dims.w + x];
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6g",
                    mask.dims.c ? sum / mask.dims.c : 0.0);
      out << (x ? "," : "") << buf;
    }
    out << '\n';
  }
  return out.str();
}

MaskPolicy parse_mask_policy(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw UsageError("mask policy must be scale:<t>, greedy:<b> or file:<p>");
  std::string kind = spec.substr(0, colon);
  std::string arg = spec.substr(colon + 1);
  try {
    if (kind == "scale") return ScaleThresholdPolicy{std::stod(arg)};
    if (kind == "greedy") return GreedyUtilityPolicy{std::stod(arg)};
  } catch (const std::exception&) {
    throw UsageError("bad numeric argument in mask policy: " + spec);
  }
  if (kind == "file") return ExternalMaskPolicy{arg};
  throw UsageError("unknown mask policy kind: " + kind);
}

}  // namespace gmc
