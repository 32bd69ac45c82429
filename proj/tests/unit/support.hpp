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

#ifndef CLALG_TESTS_SUPPORT_HPP_
#define CLALG_TESTS_SUPPORT_HPP_

#include <initializer_list>
#include <string>
#include <string_view>

#include "clalg/io.hpp"
#include "clalg/validator.hpp"

namespace clalg::testing {

inline std::string fixture_path(const std::string& file) { return std::string(CLALG_FIXTURE_DIR) + "/" + file; }

inline AlgebraCandidate load_fixture(const std::string& file) { return load_algebra(fixture_path(file)); }

/// The fixture after validation; fails the calling test if it does not seal.
inline FiniteCLAlgebra sealed_fixture(const std::string& file) {
  auto outcome = validate(load_fixture(file));
  if (!outcome.algebra) throw Error(file + " does not validate");
  return *std::move(outcome.algebra);
}

inline Subset subset_of(const Structure& alg, std::initializer_list<std::string_view> names) {
  Subset s = Subset::empty(alg.size());
  for (auto name : names) s.insert(alg.id_of(name));
  return s;
}

inline const char* const kValidFixtures[] = {"ex1_linear.cla", "two_element.cla", "one_element.cla",
                                             "boolean4.cla", "three_chain.cla"};
inline const char* const kAllFixtures[] = {"ex1_linear.cla", "ex2_nonlinear.cla", "two_element.cla",
                                           "one_element.cla", "boolean4.cla", "three_chain.cla"};

}  // namespace clalg::testing

#endif  // CLALG_TESTS_SUPPORT_HPP_
