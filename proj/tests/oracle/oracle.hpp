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

#ifndef CLALG_TESTS_ORACLE_HPP_
#define CLALG_TESTS_ORACLE_HPP_

// Brute-force reference implementations for tests. Everything here expands
// definitions literally and reads only the raw tables of a candidate
// (order.leq, mult.at, imp.at); no library algorithm is called.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "clalg/algebra.hpp"
#include "clalg/witness.hpp"

namespace clalg::oracle {

/// Every violation of every axiom, each list in the validator's
/// lexicographic order.
struct OracleResult {
  std::vector<Witness> lattice;
  std::vector<Witness> monoid;
  std::vector<Witness> residuation;
  std::vector<Witness> involution;
  bool implication_derived = false;
  /// The implication that was checked: the given one, or the derived one.
  std::optional<OperationTable> imp;

  bool all_pass() const { return lattice.empty() && monoid.empty() && residuation.empty() && involution.empty(); }
};

OracleResult oracle_validate(const AlgebraCandidate& c);

/// Literal evaluation of the derived operations on raw tables.
class Tables {
 public:
  /// Requires a lattice order and an implication (given or derivable).
  explicit Tables(const AlgebraCandidate& c);

  std::size_t size() const { return n_; }
  bool leq(std::size_t x, std::size_t y) const;
  std::size_t join(std::size_t x, std::size_t y) const;
  std::size_t meet(std::size_t x, std::size_t y) const;
  std::size_t mult(std::size_t x, std::size_t y) const;
  std::size_t imp(std::size_t x, std::size_t y) const;
  std::size_t neg(std::size_t x) const { return imp(x, zero); }
  std::size_t plus(std::size_t x, std::size_t y) const { return neg(mult(neg(x), neg(y))); }

  std::size_t bot = 0, zero = 0, one = 0, top = 0;

 private:
  AlgebraCandidate c_;
  std::size_t n_;
  OperationTable imp_;
};

using Bits = std::uint64_t;

bool oracle_is_ideal(const Tables& t, Bits s);
/// Every ideal, ascending by bit pattern, by filtering all 2^n subsets.
std::vector<Bits> oracle_ideals(const Tables& t);
/// Intersection of all ideals containing s.
Bits oracle_generated(const Tables& t, Bits s);

/// First failing tuple in lexicographic order, or nullopt.
std::optional<std::vector<std::size_t>> oracle_prime_failure(const Tables& t, Bits ideal);
std::optional<std::vector<std::size_t>> oracle_distributive_failure(const Tables& t, Bits ideal);
std::optional<std::vector<std::size_t>> oracle_implicative_failure(const Tables& t, Bits s);

struct OracleCongruence {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  bool compatible = false;
  /// Classes ordered by least member; empty unless an equivalence.
  std::vector<Bits> classes;
};

OracleCongruence oracle_congruence(const Tables& t, Bits ideal);

/// Fingerprint minimized over all n! relabelings of the order alone.
std::vector<std::uint8_t> order_key(const OrderRelation& order);
/// Fingerprint minimized over all n! relabelings of the whole structure.
std::vector<std::uint8_t> algebra_key(const AlgebraCandidate& c, const OperationTable& imp);

/// Lattices on n labelled elements filtered from all relations, then
/// bucketed by order_key. Feasible for n <= 5.
std::vector<std::vector<std::uint8_t>> oracle_lattice_keys(std::size_t n);

/// Naive census: every labelled lattice, every (zero, one), every
/// commutative table with unit row fixed, kept when oracle_validate passes.
/// Maps lattice key to the set of algebra keys on it. Feasible for n <= 4.
std::map<std::vector<std::uint8_t>, std::vector<std::vector<std::uint8_t>>> oracle_census(std::size_t n);

}  // namespace clalg::oracle

#endif  // CLALG_TESTS_ORACLE_HPP_
