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

#ifndef GMC_BITSTREAM_HPP_
#define GMC_BITSTREAM_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "gmc/types.hpp"

namespace gmc {

// Container layout (little-endian):
//   magic "GMC1" | version u8 | mode u8 | c,h,w u32 | checksum u32 |
//   [mode=1: mask block: u32 length + RLE bytes] | coder payload
// mode 0 = implicit mask (decoder recomputes it from the prior),
// mode 1 = explicit mask (transmitted run-length-encoded).
struct Bitstream {
  uint8_t version = 1;
  uint8_t mode = 0;
  Dims dims;
  uint32_t checksum = 0;
  std::vector<uint8_t> mask_rle;  // only for mode 1
  std::vector<uint8_t> payload;

  // Range-coder bytes only; the measured quantity compared against
  // estimate_rate.
  size_t payload_bits() const { return payload.size() * 8; }
  // Everything on the wire, mask block and header included.
  size_t total_bits() const;
};

uint32_t crc32(std::span<const uint8_t> data);

std::vector<uint8_t> serialize_bitstream(const Bitstream& bs);
Bitstream parse_bitstream(std::span<const uint8_t> bytes);

// Range-codes mask=1 elements in row-major order against the per-element
// Gaussian model; mask=0 elements contribute no payload bits. The checksum
// covers the full reconstructed symbol array (kept symbols plus rounded-mean
// substitutions), so a prior/mask mismatch at decode time is detected too.
Bitstream encode_tensor(const QuantizedLatent& latent,
                        const GaussianPrior& prior, const SkipMask& mask,
                        bool explicit_mask = false);

// Kept elements are decoded exactly; skipped elements reconstruct to
// round-half-away-from-zero(mean). Throws on header/dims mismatch,
// truncation, or checksum failure.
QuantizedLatent decode_tensor(const Bitstream& bs, const GaussianPrior& prior,
                              const SkipMask& mask);

// Recovers the transmitted mask from an explicit-mode bitstream.
SkipMask mask_from_bitstream(const Bitstream& bs);

}  // namespace gmc

#endif  // GMC_BITSTREAM_HPP_
