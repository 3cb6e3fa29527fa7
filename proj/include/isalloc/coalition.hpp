// Copyright 2026 The isalloc Authors
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

#ifndef ISALLOC_COALITION_HPP
#define ISALLOC_COALITION_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace isalloc {

/// A set of firms as a bitmask over firm indices.
///
/// Coalitions only appear on the enumeration paths (exact Shapley values and
/// the exhaustive checkers), which are exponential in the number of firms
/// and capped far below 64. The closed-form allocation never builds one.
class Coalition {
 public:
  static constexpr std::size_t kMaxFirms = 64;

  constexpr Coalition() noexcept = default;
  constexpr explicit Coalition(std::uint64_t bits) noexcept : bits_(bits) {}
  Coalition(std::initializer_list<std::size_t> members) noexcept {
    for (std::size_t i : members) bits_ |= std::uint64_t{1} << i;
  }

  /// All of 0..n-1.
  static constexpr Coalition grand(std::size_t n) noexcept {
    return Coalition(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr Coalition singleton(std::size_t i) noexcept { return Coalition(std::uint64_t{1} << i); }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const noexcept { return ((bits_ >> i) & 1U) != 0; }
  constexpr bool subset_of(Coalition other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(Coalition other) const noexcept { return (bits_ & other.bits_) == 0; }

  constexpr Coalition with(std::size_t i) const noexcept { return Coalition(bits_ | (std::uint64_t{1} << i)); }
  constexpr Coalition without(std::size_t i) const noexcept { return Coalition(bits_ & ~(std::uint64_t{1} << i)); }

  friend constexpr Coalition operator|(Coalition a, Coalition b) noexcept { return Coalition(a.bits_ | b.bits_); }
  friend constexpr Coalition operator&(Coalition a, Coalition b) noexcept { return Coalition(a.bits_ & b.bits_); }
  friend constexpr Coalition operator-(Coalition a, Coalition b) noexcept { return Coalition(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Coalition, Coalition) noexcept = default;

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Renders as "{0,2,5}" using indices, or firm ids when given.
std::string to_string(Coalition s, const std::vector<std::string>* firm_ids = nullptr);

}  // namespace isalloc

#endif  // ISALLOC_COALITION_HPP
