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

#ifndef CLALG_IO_HPP_
#define CLALG_IO_HPP_

#include <string>
#include <string_view>

#include "clalg/algebra.hpp"

namespace clalg {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

/// Reads the line-oriented `.cla` format:
///
///   # comment
///   algebra NAME
///   elements: id id ...
///   bot: id
///   zero: id
///   one: id
///   cover: lo hi          (one per Hasse edge, any number)
///   mult:
///   <n rows of n ids, rows and columns in declaration order>
///   imp:                  (optional, same shape)
///   end
///
/// Identifiers match [A-Za-z0-9_]+.
AlgebraCandidate parse_algebra(std::string_view text);
AlgebraCandidate load_algebra(const std::string& path);

/// Inverse of parse_algebra on its image. Throws Error if a name is not a
/// valid identifier (e.g. bracketed quotient class names).
std::string serialize_algebra(const AlgebraCandidate& candidate);

/// Hasse diagram in Graphviz DOT, bottom-up, one edge per cover of the
/// order. bot, 0, 1 and top (when given) are annotated in node labels.
std::string export_dot(const AlgebraCandidate& candidate, std::optional<ElementId> top = std::nullopt);
std::string export_dot(const Structure& alg);

}  // namespace clalg

#endif  // CLALG_IO_HPP_
