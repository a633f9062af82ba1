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

#include "gmc/gop.hpp"

#include <algorithm>
#include <sstream>

namespace gmc {

const char* frame_type_name(FrameType t) {
  switch (t) {
    case FrameType::I: return "I";
    case FrameType::P: return "P";
    case FrameType::Pm: return "Pm";
    case FrameType::Pr: return "Pr";
  }
  return "?";
}

FrameType frame_type_from_name(const std::string& name) {
  if (name == "I") return FrameType::I;
  if (name == "P") return FrameType::P;
  if (name == "Pm") return FrameType::Pm;
  if (name == "Pr") return FrameType::Pr;
  throw InputError("unknown frame type: " + name);
}

void GopStructure::validate() const {
  if (frames.empty()) throw InputError("GoP must contain at least one frame");
  if (frames[0] != FrameType::I)
    throw InputError("GoP must start with an I frame");
  for (size_t i = 1; i < frames.size(); ++i)
    if (frames[i] == FrameType::I)
      throw InputError("only the first frame may be I");
}

std::string GopStructure::to_text() const {
  std::ostringstream out;
  for (size_t i = 0; i < frames.size(); ++i)
    out << (i ? "," : "") << frame_type_name(frames[i]);
  return out.str();
}

GopStructure GopStructure::from_text(const std::string& text) {
  GopStructure s;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ','))
    s.frames.push_back(frame_type_from_name(tok));
  s.validate();
  return s;
}

size_t GopStructure::count(FrameType t) const {
  return size_t(std::count(frames.begin(), frames.end(), t));
}

GopStructure divgop(int n) {
  if (n < 1) throw InputError("divgop: GoP size must be >= 1");
  GopStructure s;
  s.frames.reserve(size_t(n));
  s.frames.push_back(FrameType::I);
  for (int t = 1; t < n; ++t)
    s.frames.push_back(t % 2 == 1 ? FrameType::Pm : FrameType::P);
  return s;
}

GopStructure all_p(int n) {
  if (n < 1) throw InputError("all_p: GoP size must be >= 1");
  GopStructure s;
  s.frames.assign(size_t(n), FrameType::P);
  s.frames[0] = FrameType::I;
  return s;
}

std::vector<uint8_t> to_binary(const GopStructure& s) {
  s.validate();
  std::vector<uint8_t> bits;
  bits.reserve(s.frames.size() - 1);
  for (size_t i = 1; i < s.frames.size(); ++i) {
    switch (s.frames[i]) {
      case FrameType::P: bits.push_back(1); break;
      case FrameType::Pm: bits.push_back(0); break;
      default:
        throw InputError("to_binary: structure contains non-P/Pm frames");
    }
  }
  return bits;
}

GopStructure from_binary(const std::vector<uint8_t>& bits) {
  GopStructure s;
  s.frames.reserve(bits.size() + 1);
  s.frames.push_back(FrameType::I);
  for (uint8_t b : bits) {
    if (b > 1) throw InputError("from_binary: bits must be 0 or 1");
    s.frames.push_back(b ? FrameType::P : FrameType::Pm);
  }
  return s;
}

std::string binary_to_text(const std::vector<uint8_t>& bits) {
  std::string out;
  out.reserve(bits.size());
  for (uint8_t b : bits) out.push_back(b ? '1' : '0');
  return out;
}

std::vector<int> reference_schedule(const GopStructure& s) {
  s.validate();
  std::vector<int> refs(s.frames.size());
  int ref = -1;
  for (size_t t = 0; t < s.frames.size(); ++t) {
    refs[t] = ref;
    if (updates_reference(s.frames[t])) ref = int(t);
  }
  return refs;
}

}  // namespace gmc
