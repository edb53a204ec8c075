// Copyright 2026 The degga Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "degga/bitstring.hpp"

#include <algorithm>

#include "degga/error.hpp"

namespace degga {

BitString::BitString(int width, std::uint64_t index)
    : width_(width), index_(index) {
  if (width < 1 || width > kMaxQubits) {
    throw ValidationError("bit string width must be in 1.." +
                          std::to_string(kMaxQubits) + ", got " +
                          std::to_string(width));
  }
  if (index >> width != 0) {
    throw ValidationError("index " + std::to_string(index) +
                          " does not fit in " + std::to_string(width) +
                          " bits");
  }
}

BitString BitString::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty bit string");
  if (text.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw ParseError("bit string '" + std::string(text) + "' is longer than " +
                     std::to_string(kMaxQubits) + " bits");
  }
  std::uint64_t index = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ParseError("bit string '" + std::string(text) +
                       "' may only contain 0 and 1");
    }
    index = (index << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return BitString(static_cast<int>(text.size()), index);
}

bool BitString::bit(int position) const {
  if (position < 0 || position >= width_) {
    throw ValidationError("bit position " + std::to_string(position) +
                          " out of range");
  }
  return ((index_ >> (width_ - 1 - position)) & 1U) != 0;
}

BitString BitString::slice(int offset, int length) const {
  if (offset < 0 || length < 1 || offset + length > width_) {
    throw ValidationError("slice [" + std::to_string(offset) + ", " +
                          std::to_string(offset + length) +
                          ") out of range for width " + std::to_string(width_));
  }
  const int shift = width_ - offset - length;
  const std::uint64_t mask = (std::uint64_t{1} << length) - 1;
  return BitString(length, (index_ >> shift) & mask);
}

std::string BitString::str() const {
  std::string out(static_cast<std::size_t>(width_), '0');
  for (int i = 0; i < width_; ++i) {
    if (bit(i)) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

TargetSet::TargetSet(int width, std::vector<BitString> members)
    : width_(width), members_(std::move(members)) {
  if (members_.empty()) throw ValidationError("target set must not be empty");
  for (const auto& m : members_) {
    if (m.width() != width_) {
      throw ValidationError("target '" + m.str() + "' has width " +
                            std::to_string(m.width()) + ", expected " +
                            std::to_string(width_));
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

TargetSet TargetSet::parse(std::initializer_list<std::string_view> texts) {
  std::vector<std::string> owned(texts.begin(), texts.end());
  return parse(owned);
}

TargetSet TargetSet::parse(const std::vector<std::string>& texts) {
  if (texts.empty()) throw ValidationError("target set must not be empty");
  std::vector<BitString> members;
  members.reserve(texts.size());
  for (const auto& t : texts) members.push_back(BitString::parse(t));
  const int width = members.front().width();
  return TargetSet(width, std::move(members));
}

bool TargetSet::contains(std::uint64_t index) const {
  return std::binary_search(members_.begin(), members_.end(),
                            BitString(width_, index));
}

bool TargetSet::is_proper() const noexcept {
  return members_.size() < (std::uint64_t{1} << width_);
}

void TargetSet::require_proper() const {
  if (!is_proper()) {
    throw ValidationError("target set must be a proper subset of {0,1}^" +
                          std::to_string(width_));
  }
}

}  // namespace degga
