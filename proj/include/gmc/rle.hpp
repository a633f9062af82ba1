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

#ifndef GMC_RLE_HPP_
#define GMC_RLE_HPP_

#include <cstdint>
#include <vector>

#include "gmc/errors.hpp"

namespace gmc {

// Run-length coding for binary masks: one byte holding the first run's bit
// value, then LEB128 run lengths of alternating value.
inline std::vector<uint8_t> rle_encode_bits(const std::vector<uint8_t>& bits) {
  std::vector<uint8_t> out;
  if (bits.empty()) return out;
  out.push_back(bits[0] ? 1 : 0);
  auto put_varint = [&out](uint64_t v) {
    while (v >= 0x80) {
      out.push_back(uint8_t(v) | 0x80);
      v >>= 7;
    }
    out.push_back(uint8_t(v));
  };
  uint64_t run = 1;
  for (size_t i = 1; i < bits.size(); ++i) {
    if ((bits[i] != 0) == (bits[i - 1] != 0)) {
      ++run;
    } else {
      put_varint(run);
      run = 1;
    }
  }
  put_varint(run);
  return out;
}

inline std::vector<uint8_t> rle_decode_bits(const std::vector<uint8_t>& rle,
                                            size_t expected_size) {
  std::vector<uint8_t> bits;
  if (expected_size == 0) {
    if (!rle.empty()) throw InputError("rle: trailing data for empty mask");
    return bits;
  }
  if (rle.empty()) throw InputError("rle: empty stream");
  bits.reserve(expected_size);
  uint8_t value = rle[0] ? 1 : 0;
  size_t pos = 1;
  auto get_varint = [&rle, &pos]() {
    uint64_t v = 0;
    unsigned shift = 0;
    while (true) {
      if (pos >= rle.size()) throw InputError("rle: truncated run length");
      uint8_t b = rle[pos++];
      v |= uint64_t(b & 0x7F) << shift;
      if (!(b & 0x80)) return v;
      shift += 7;
      if (shift > 63) throw InputError("rle: run length overflow");
    }
  };
  while (bits.size() < expected_size) {
    uint64_t run = get_varint();
    if (run == 0 || run > expected_size - bits.size())
      throw InputError("rle: run length out of bounds");
    bits.insert(bits.end(), run, value);
    value ^= 1;
  }
  if (pos != rle.size()) throw InputError("rle: trailing data");
  return bits;
}

}  // namespace gmc

#endif  // GMC_RLE_HPP_
