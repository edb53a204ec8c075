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

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace degga {

/// Largest register handled anywhere in the library.
inline constexpr int kMaxQubits = 24;

/**
 * A fixed-width bit string b_0 b_1 ... b_{w-1}.
 *
 * Bit 0 is the most significant: the basis-state index of the string is
 * sum_i b_i * 2^(w-1-i), so "000001" is index 1 and qubit 0 is the leftmost
 * character.
 */
class BitString {
 public:
  BitString(int width, std::uint64_t index);

  /// Parses a string of '0'/'1' characters. Throws ParseError.
  static BitString parse(std::string_view text);

  int width() const noexcept { return width_; }
  std::uint64_t index() const noexcept { return index_; }
  bool bit(int position) const;

  /// Sub-string of `length` bits starting at `offset`.
  BitString slice(int offset, int length) const;

  std::string str() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString& a,
                                          const BitString& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.index_ <=> b.index_;
  }

 private:
  int width_;
  std::uint64_t index_;
};

/**
 * The marked set A of a search instance: a nonempty, sorted, duplicate-free
 * collection of equal-width bit strings.
 */
class TargetSet {
 public:
  TargetSet(int width, std::vector<BitString> members);

  static TargetSet parse(std::initializer_list<std::string_view> texts);
  static TargetSet parse(const std::vector<std::string>& texts);

  int width() const noexcept { return width_; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<BitString>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool contains(std::uint64_t index) const;

  /// True when at least one basis state is unmarked.
  bool is_proper() const noexcept;

  /// Throws ValidationError unless the set is a proper subset of {0,1}^n.
  void require_proper() const;

  friend bool operator==(const TargetSet&, const TargetSet&) = default;

 private:
  int width_;
  std::vector<BitString> members_;
};

}  // namespace degga
