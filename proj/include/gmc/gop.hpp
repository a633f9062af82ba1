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

#ifndef GMC_GOP_HPP_
#define GMC_GOP_HPP_

#include <string>
#include <vector>

#include "gmc/errors.hpp"

namespace gmc {

// I    intra frame, opens the GoP and the reference chain.
// P    fully coded predicted frame; becomes the new reference.
// Pm   machine-vision frame with skip-reduced payload; references the last
//      I/P and never becomes a reference itself.
// Pr   ablation frame reconstructed from motion warp alone; reference
//      semantics as Pm. Only meaningful on backends that support it.
enum class FrameType : uint8_t { I, P, Pm, Pr };

const char* frame_type_name(FrameType t);
FrameType frame_type_from_name(const std::string& name);

// Whether a frame of this type replaces the reference after coding.
inline bool updates_reference(FrameType t) {
  return t == FrameType::I || t == FrameType::P;
}

// Ordered frame types of one GoP. frames[0] is the only I frame.
struct GopStructure {
  std::vector<FrameType> frames;

  size_t size() const { return frames.size(); }
  void validate() const;

  // "I,Pm,P,Pm,P" form.
  std::string to_text() const;
  static GopStructure from_text(const std::string& text);

  size_t count(FrameType t) const;
};

// Hand-crafted alternating structure I, Pm, P, Pm, P, ... The alternation
// is strict, so even sizes end on Pm.
GopStructure divgop(int n);

GopStructure all_p(int n);

// Binary form over the N-1 predicted frames: 1 = P, 0 = Pm. Bijective with
// P/Pm structures; Pr has no binary digit and is rejected.
std::vector<uint8_t> to_binary(const GopStructure& s);
GopStructure from_binary(const std::vector<uint8_t>& bits);

std::string binary_to_text(const std::vector<uint8_t>& bits);

// Per-frame reference index: -1 for the I frame, otherwise the most recent
// earlier frame that updates the reference.
std::vector<int> reference_schedule(const GopStructure& s);

}  // namespace gmc

#endif  // GMC_GOP_HPP_
