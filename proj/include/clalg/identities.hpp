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

#ifndef CLALG_IDENTITIES_HPP_
#define CLALG_IDENTITIES_HPP_

#include <array>
#include <span>
#include <string_view>
#include <utility>

#include "clalg/algebra.hpp"
#include "clalg/witness.hpp"

namespace clalg {

/// Derived laws of CL-algebras, checked exhaustively on finite instances.
///
///   P2_1   x*(y v z) = (x*y) v (x*z)
///   P2_2   x <= bot->bot for all x
///   P2_3   x,y <= 1  =>  x*y <= x ^ y
///   P2_4   1 <= x,y  =>  x v y <= x*y
///   P2_5   (x->y)*(y->z) <= x->z
///   P2_6   1->x = x
///   P2_7   x <= x1, y <= y1  =>  x*y <= x1*y1  and  x1->y <= x->y1
///   P2_8   x->(y->z) = (x*y)->z
///   P2_9   x*(x->y) <= y
///   P2_10  x <= y  =>  ~y <= ~x
///   P2_11  x v y = ~(~x ^ ~y)
///   P2_12  x ^ y = ~(~x v ~y)
///   P2_13  x->y = ~(x*~y)
///   P2_14  ~x->y = ~(~x*~y)
///   P2_15  ~top = bot
///   P2_16  ~top*top = bot
///   LEMMA_MEET_IMP  (z->x) ^ (z->y) = z->(x ^ y)
enum class IdentityId {
  P2_1, P2_2, P2_3, P2_4, P2_5, P2_6, P2_7, P2_8, P2_9,
  P2_10, P2_11, P2_12, P2_13, P2_14, P2_15, P2_16, LemmaMeetImp,
};

inline constexpr std::array<IdentityId, 17> kAllIdentities = {
    IdentityId::P2_1,  IdentityId::P2_2,  IdentityId::P2_3,  IdentityId::P2_4,  IdentityId::P2_5,
    IdentityId::P2_6,  IdentityId::P2_7,  IdentityId::P2_8,  IdentityId::P2_9,  IdentityId::P2_10,
    IdentityId::P2_11, IdentityId::P2_12, IdentityId::P2_13, IdentityId::P2_14, IdentityId::P2_15,
    IdentityId::P2_16, IdentityId::LemmaMeetImp,
};

class UnknownIdentity : public Error {
 public:
  explicit UnknownIdentity(std::string_view tag);
};

std::string_view to_string(IdentityId id);
/// Accepts the tags printed by to_string. Throws UnknownIdentity.
IdentityId identity_from_string(std::string_view tag);
/// Number of quantified variables.
std::size_t arity(IdentityId id);

/// Witness rule is the identity tag; args are the quantified variables in
/// the order of the formula listing above.
Verdict check_identity(const FiniteCLAlgebra& alg, IdentityId id);

struct IdentityReport {
  std::array<std::pair<IdentityId, Verdict>, 17> results;
  bool all_pass() const;
};

IdentityReport run_identity_suite(const FiniteCLAlgebra& alg);

/// Evaluates one instance of the identity; false means `args` is a
/// counterexample. Shared with witness replay.
bool identity_holds_at(const Structure& alg, ElementId top, IdentityId id, std::span<const ElementId> args);

}  // namespace clalg

#endif  // CLALG_IDENTITIES_HPP_
