// Copyright 2026 The clalg Authors
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

#ifndef CLALG_ELEMENT_HPP_
#define CLALG_ELEMENT_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace clalg {

/// Largest supported universe. Subsets are stored in one 64-bit word.
inline constexpr std::size_t kMaxElements = 64;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Index of an element in declaration order.
class ElementId {
 public:
  constexpr ElementId() = default;
  constexpr explicit ElementId(std::size_t index)
      : index_(static_cast<std::uint8_t>(index)) {}

  constexpr std::size_t index() const { return index_; }

  friend constexpr auto operator<=>(ElementId, ElementId) = default;

 private:
  std::uint8_t index_ = 0;
};

/// Subset of a universe of at most kMaxElements elements.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr Subset(std::size_t universe_size, std::uint64_t bits)
      : n_(universe_size), bits_(bits & mask_for(universe_size)) {}

  static constexpr Subset empty(std::size_t n) { return Subset(n, 0); }
  static constexpr Subset full(std::size_t n) { return Subset(n, mask_for(n)); }

  constexpr std::size_t universe_size() const { return n_; }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(ElementId x) const { return (bits_ >> x.index()) & 1U; }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr bool is_full() const { return bits_ == mask_for(n_); }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool is_subset_of(const Subset& other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr void insert(ElementId x) { bits_ |= std::uint64_t{1} << x.index(); }
  constexpr void erase(ElementId x) { bits_ &= ~(std::uint64_t{1} << x.index()); }

  /// Members in ascending index order.
  std::vector<ElementId> elements() const {
    std::vector<ElementId> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.emplace_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  constexpr Subset operator|(const Subset& o) const { return Subset(n_, bits_ | o.bits_); }
  constexpr Subset operator&(const Subset& o) const { return Subset(n_, bits_ & o.bits_); }

  friend constexpr bool operator==(const Subset&, const Subset&) = default;
  /// Canonical order: ascending bit pattern.
  friend constexpr auto operator<=>(const Subset& a, const Subset& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

  static constexpr std::uint64_t mask_for(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

 private:
  std::size_t n_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace clalg

#endif  // CLALG_ELEMENT_HPP_
