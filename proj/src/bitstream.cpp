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

#include "gmc/bitstream.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>

#include "gmc/entropy.hpp"
#include "gmc/range_coder.hpp"
#include "gmc/rle.hpp"

namespace gmc {

namespace {

constexpr char kMagic[4] = {'G', 'M', 'C', '1'};
constexpr unsigned kTotBits = 16;
constexpr uint32_t kTotal = 1u << kTotBits;
constexpr int32_t kMaxHalfWindow = 2048;

const std::array<uint32_t, 256>& crc_table() {
  static const std::array<uint32_t, 256> table = [] {
    std::array<uint32_t, 256> t{};
    for (uint32_t i = 0; i < 256; ++i) {
      uint32_t c = i;
      for (int k = 0; k < 8; ++k)
        c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
      t[i] = c;
    }
    return t;
  }();
  return table;
}

// Quantized per-element model: frequencies for the symbol window
// [lo, hi] plus a final escape slot for everything outside. Every slot
// gets at least one count, so any in-alphabet symbol stays decodable.
struct ElementCdf {
  int32_t lo = 0;
  int32_t hi = 0;
  std::vector<uint32_t> cum;  // size slots+1, cum.back() == kTotal

  size_t esc_slot() const { return cum.size() - 2; }
};

ElementCdf build_cdf(double mean, double scale) {
  if (scale < kScaleMin) scale = kScaleMin;
  int32_t center = round_half_away(mean);
  int32_t half = int32_t(std::ceil(6.0 * scale)) + 1;
  if (half > kMaxHalfWindow) half = kMaxHalfWindow;

  ElementCdf cdf;
  cdf.lo = std::max(center - half, -kSymbolMax);
  cdf.hi = std::min(center + half, kSymbolMax);

  size_t slots = size_t(cdf.hi - cdf.lo + 1) + 1;  // window + escape
  uint32_t budget = kTotal - uint32_t(slots);

  std::vector<uint32_t> freq(slots);
  double window_mass = 0.0;
  for (int32_t s = cdf.lo; s <= cdf.hi; ++s) {
    double p = gaussian_mass(s, mean, scale);
    window_mass += p;
    // floor() keeps the quantized probability of bulk symbols at or below
    // the true mass, so measured length stays >= the analytic estimate.
    freq[size_t(s - cdf.lo)] = uint32_t(std::floor(p * budget)) + 1;
  }
  double tail = window_mass < 1.0 ? 1.0 - window_mass : 0.0;
  freq.back() = uint32_t(std::floor(tail * budget)) + 1;

  uint64_t sum = 0;
  for (uint32_t f : freq) sum += f;
  freq.back() += uint32_t(kTotal - sum);  // remainder goes to the escape

  cdf.cum.resize(slots + 1);
  cdf.cum[0] = 0;
  for (size_t i = 0; i < slots; ++i) cdf.cum[i + 1] = cdf.cum[i] + freq[i];
  return cdf;
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(uint8_t(v));
  out.push_back(uint8_t(v >> 8));
  out.push_back(uint8_t(v >> 16));
  out.push_back(uint8_t(v >> 24));
}

uint32_t get_u32(std::span<const uint8_t> bytes, size_t at) {
  return uint32_t(bytes[at]) | uint32_t(bytes[at + 1]) << 8 |
         uint32_t(bytes[at + 2]) << 16 | uint32_t(bytes[at + 3]) << 24;
}

uint32_t symbols_crc(const std::vector<int32_t>& symbols) {
  std::vector<uint8_t> raw;
  raw.reserve(symbols.size() * 4);
  for (int32_t s : symbols) put_u32(raw, uint32_t(s));
  return crc32(raw);
}

std::vector<int32_t> substituted_symbols(const QuantizedLatent& latent,
                                         const GaussianPrior& prior,
                                         const SkipMask& mask) {
  std::vector<int32_t> out(latent.symbols);
  for (size_t i = 0; i < out.size(); ++i)
    if (!mask.bits[i]) out[i] = round_half_away(prior.mean[i]);
  return out;
}

}  // namespace

uint32_t crc32(std::span<const uint8_t> data) {
  const auto& table = crc_table();
  uint32_t c = 0xFFFFFFFFu;
  for (uint8_t b : data) c = table[(c ^ b) & 0xFF] ^ (c >> 8);
  return c ^ 0xFFFFFFFFu;
}

size_t Bitstream::total_bits() const {
  return serialize_bitstream(*this).size() * 8;
}

std::vector<uint8_t> serialize_bitstream(const Bitstream& bs) {
  std::vector<uint8_t> out;
  out.insert(out.end(), kMagic, kMagic + 4);
  out.push_back(bs.version);
  out.push_back(bs.mode);
  put_u32(out, bs.dims.c);
  put_u32(out, bs.dims.h);
  put_u32(out, bs.dims.w);
  put_u32(out, bs.checksum);
  if (bs.mode == 1) {
    put_u32(out, uint32_t(bs.mask_rle.size()));
    out.insert(out.end(), bs.mask_rle.begin(), bs.mask_rle.end());
  }
  out.insert(out.end(), bs.payload.begin(), bs.payload.end());
  return out;
}

Bitstream parse_bitstream(std::span<const uint8_t> bytes) {
  if (bytes.size() < 22) throw InputError("bitstream: truncated header");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw InputError("bitstream: bad magic");
  Bitstream bs;
  bs.version = bytes[4];
  if (bs.version != 1) throw InputError("bitstream: unsupported version");
  bs.mode = bytes[5];
  if (bs.mode > 1) throw InputError("bitstream: bad mode flag");
  bs.dims = Dims{get_u32(bytes, 6), get_u32(bytes, 10), get_u32(bytes, 14)};
  bs.checksum = get_u32(bytes, 18);
  size_t pos = 22;
  if (bs.mode == 1) {
    if (bytes.size() < pos + 4)
      throw InputError("bitstream: truncated mask block");
    uint32_t len = get_u32(bytes, pos);
    pos += 4;
    if (bytes.size() < pos + len)
      throw InputError("bitstream: truncated mask block");
    bs.mask_rle.assign(bytes.begin() + pos, bytes.begin() + pos + len);
    pos += len;
  }
  bs.payload.assign(bytes.begin() + pos, bytes.end());
  return bs;
}

Bitstream encode_tensor(const QuantizedLatent& latent,
                        const GaussianPrior& prior, const SkipMask& mask,
                        bool explicit_mask) {
  latent.validate();
  mask.validate();
  if (latent.dims != prior.dims || latent.dims != mask.dims)
    throw InputError("encode_tensor: dims mismatch");

  RangeEncoder enc;
  for (size_t i = 0; i < latent.symbols.size(); ++i) {
    if (!mask.bits[i]) continue;
    int32_t s = latent.symbols[i];
    ElementCdf cdf = build_cdf(prior.mean[i], prior.scale[i]);
    if (s >= cdf.lo && s <= cdf.hi) {
      size_t slot = size_t(s - cdf.lo);
      enc.encode(cdf.cum[slot], cdf.cum[slot + 1] - cdf.cum[slot], kTotBits);
    } else {
      size_t esc = cdf.esc_slot();
      enc.encode(cdf.cum[esc], cdf.cum[esc + 1] - cdf.cum[esc], kTotBits);
      enc.encode_raw(uint32_t(s + 32768), 16);
    }
  }

  Bitstream bs;
  bs.mode = explicit_mask ? 1 : 0;
  bs.dims = latent.dims;
  bs.checksum = symbols_crc(substituted_symbols(latent, prior, mask));
  if (explicit_mask) bs.mask_rle = rle_encode_bits(mask.bits);
  bs.payload = enc.finish();
  return bs;
}

QuantizedLatent decode_tensor(const Bitstream& bs, const GaussianPrior& prior,
                              const SkipMask& mask) {
  if (bs.dims != prior.dims)
    throw InputError("decode_tensor: header dims do not match prior");
  if (mask.dims != prior.dims)
    throw InputError("decode_tensor: mask dims do not match prior");

  QuantizedLatent out;
  out.dims = bs.dims;
  out.symbols.resize(bs.dims.size());

  RangeDecoder dec(bs.payload);
  for (size_t i = 0; i < out.symbols.size(); ++i) {
    if (!mask.bits[i]) {
      out.symbols[i] = round_half_away(prior.mean[i]);
      continue;
    }
    ElementCdf cdf = build_cdf(prior.mean[i], prior.scale[i]);
    uint32_t target = dec.decode_target(kTotBits);
    size_t slot =
        size_t(std::upper_bound(cdf.cum.begin(), cdf.cum.end(), target) -
               cdf.cum.begin()) -
        1;
    dec.consume(cdf.cum[slot], cdf.cum[slot + 1] - cdf.cum[slot]);
    if (slot == cdf.esc_slot())
      out.symbols[i] = int32_t(dec.decode_raw(16)) - 32768;
    else
      out.symbols[i] = cdf.lo + int32_t(slot);
  }

  if (symbols_crc(out.symbols) != bs.checksum)
    throw InputError("decode_tensor: checksum mismatch");
  return out;
}

SkipMask mask_from_bitstream(const Bitstream& bs) {
  if (bs.mode != 1)
    throw InputError("mask_from_bitstream: bitstream has no explicit mask");
  SkipMask mask;
  mask.dims = bs.dims;
  mask.bits = rle_decode_bits(bs.mask_rle, bs.dims.size());
  return mask;
}

}  // namespace gmc
