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

#ifndef GMC_RNG_HPP_
#define GMC_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <string_view>

namespace gmc {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent seed for a named sub-stream. All randomness in the
// engine flows from one root seed through these, so components stay
// individually reproducible regardless of evaluation order.
inline uint64_t substream(uint64_t root, std::string_view name,
                          uint64_t a = 0, uint64_t b = 0, uint64_t c = 0) {
  uint64_t h = splitmix64(root);
  for (char ch : name) h = splitmix64(h ^ static_cast<uint64_t>(uint8_t(ch)));
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  h = splitmix64(h ^ c);
  return h;
}

// Minimal deterministic generator with a platform-independent mapping to
// doubles in (0,1). Used wherever draws must be stable across toolchains.
class SplitMix {
 public:
  explicit SplitMix(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in the open interval (0,1).
  double uniform() {
    return (next() >> 11) * 0x1.0p-53 + 0x1.0p-54;
  }

  // Marsaglia polar method would need rejection; Box-Muller on two draws
  // keeps the draw count per call fixed.
  double gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  uint64_t state_;
};

}  // namespace gmc

#endif  // GMC_RNG_HPP_
