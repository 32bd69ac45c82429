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

#ifndef CLALG_SEARCH_HPP_
#define CLALG_SEARCH_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clalg/algebra.hpp"

namespace clalg {

inline constexpr std::size_t kDefaultMaxSearchSize = 6;
inline constexpr std::size_t kHardMaxSearchSize = 8;

class SizeOutOfRange : public Error {
 public:
  SizeOutOfRange(std::size_t n, std::size_t cap);
};

/// Isomorphism-invariant fingerprint: the lexicographically least encoding
/// of (order, bot, zero, one, mult, imp) over all relabelings that list the
/// elements along a linear extension of the order.
struct CanonicalForm {
  std::vector<std::uint8_t> code;

  std::string to_string() const;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Relabeling x -> perm[x] of every table and designated element.
AlgebraCandidate relabeled(const AlgebraCandidate& c, std::span<const ElementId> perm);

/// Linear extensions (as position -> element sequences) minimizing the
/// order encoding. For a canonically labelled lattice these are exactly its
/// automorphisms.
std::vector<std::vector<ElementId>> canonical_labelings(const OrderRelation& order);

CanonicalForm canonical_form(const Structure& alg);
/// Same as canonical_form, restricted to precomputed labelings of alg's order.
CanonicalForm canonical_form(const Structure& alg, std::span<const std::vector<ElementId>> labelings);

/// All lattices with n elements up to isomorphism, each in canonical
/// labelling (bottom is element 0, top is n-1), ascending by encoding.
/// Throws SizeOutOfRange unless 2 <= n <= kHardMaxSearchSize.
std::vector<OrderRelation> enumerate_lattices(std::size_t n);

/// Every CL-algebra on the given lattice with the given 0 and 1, found by
/// backtracking over commutative tables with unit `one`. Each result has
/// passed validate(). Not deduplicated up to isomorphism.
std::vector<FiniteCLAlgebra> complete_to_cl(const OrderRelation& lattice, ElementId zero, ElementId one);

struct SearchConfig {
  std::size_t size = 0;
  std::optional<std::size_t> max_results;
  bool count_only = false;
  std::optional<OrderRelation> lattice;
  /// Permits sizes above kDefaultMaxSearchSize, up to kHardMaxSearchSize.
  bool allow_large = false;
  unsigned threads = 1;
};

struct CensusRow {
  std::size_t size = 0;
  std::size_t lattice_index = 0;
  std::size_t count = 0;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct CensusEntry {
  std::size_t lattice_index = 0;
  CanonicalForm form;
  FiniteCLAlgebra algebra;
};

struct Census {
  std::size_t size = 0;
  std::vector<OrderRelation> lattices;
  std::vector<CensusRow> rows;
  /// Isomorphism classes in (lattice index, canonical form) order; empty
  /// when count_only, cut at max_results otherwise.
  std::vector<CensusEntry> algebras;
  std::size_t total = 0;
  bool truncated = false;
};

/// Counts CL-algebras of the configured size up to isomorphism. Output is
/// identical for any thread count.
Census count_cl_algebras(const SearchConfig& config);

}  // namespace clalg

#endif  // CLALG_SEARCH_HPP_
