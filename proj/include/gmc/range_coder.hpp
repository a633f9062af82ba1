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

#ifndef GMC_RANGE_CODER_HPP_
#define GMC_RANGE_CODER_HPP_

#include <cstdint>
#include <vector>

#include "gmc/errors.hpp"

// Byte-oriented range coder with 32-bit range and deferred carry
// propagation through a cache/run pair. Frequencies are given against a
// power-of-two total (tot_bits <= 16). The first output byte is always the
// initial zero cache byte; the decoder skips it.

namespace gmc {

class RangeEncoder {
 public:
  void encode(uint32_t cum, uint32_t freq, unsigned tot_bits) {
    range_ >>= tot_bits;
    low_ += uint64_t(cum) * range_;
    range_ *= freq;
    while (range_ < kTop) {
      shift_low();
      range_ <<= 8;
    }
  }

  // Raw bits, uniform model. Used for escape/bypass payloads.
  void encode_raw(uint32_t value, unsigned nbits) {
    while (nbits > 0) {
      unsigned chunk = nbits > 8 ? 8 : nbits;
      nbits -= chunk;
      encode((value >> nbits) & ((1u << chunk) - 1), 1, chunk);
    }
  }

  std::vector<uint8_t> finish() {
    for (int i = 0; i < 5; ++i) shift_low();
    return std::move(out_);
  }

 private:
  static constexpr uint32_t kTop = 1u << 24;

  void shift_low() {
    if (uint32_t(low_) < 0xFF000000u || (low_ >> 32) != 0) {
      uint8_t carry = uint8_t(low_ >> 32);
      out_.push_back(uint8_t(cache_ + carry));
      while (--pending_ != 0) out_.push_back(uint8_t(0xFF + carry));
      cache_ = uint8_t(low_ >> 24);
    }
    ++pending_;
    low_ = (low_ << 8) & 0xFFFFFFFFull;
  }

  std::vector<uint8_t> out_;
  uint64_t low_ = 0;
  uint64_t pending_ = 1;
  uint32_t range_ = 0xFFFFFFFFu;
  uint8_t cache_ = 0;
};

class RangeDecoder {
 public:
  explicit RangeDecoder(const std::vector<uint8_t>& bytes) : bytes_(bytes) {
    next_byte();  // discard the encoder's initial cache byte
    for (int i = 0; i < 4; ++i) code_ = (code_ << 8) | next_byte();
  }

  // Position within [0, 2^tot_bits) of the next symbol's cumulative slot.
  uint32_t decode_target(unsigned tot_bits) {
    range_ >>= tot_bits;
    uint32_t t = code_ / range_;
    uint32_t limit = (1u << tot_bits) - 1;
    return t > limit ? limit : t;
  }

  void consume(uint32_t cum, uint32_t freq) {
    code_ -= cum * range_;
    range_ *= freq;
    while (range_ < kTop) {
      code_ = (code_ << 8) | next_byte();
      range_ <<= 8;
    }
  }

  uint32_t decode_raw(unsigned nbits) {
    uint32_t v = 0;
    while (nbits > 0) {
      unsigned chunk = nbits > 8 ? 8 : nbits;
      nbits -= chunk;
      uint32_t t = decode_target(chunk);
      consume(t, 1);
      v = (v << chunk) | t;
    }
    return v;
  }

 private:
  static constexpr uint32_t kTop = 1u << 24;

  uint8_t next_byte() {
    if (pos_ >= bytes_.size())
      throw InputError("range decoder: truncated payload");
    return bytes_[pos_++];
  }

  const std::vector<uint8_t>& bytes_;
  size_t pos_ = 0;
  uint32_t code_ = 0;
  uint32_t range_ = 0xFFFFFFFFu;
};

}  // namespace gmc

#endif  // GMC_RANGE_CODER_HPP_
