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

#include "clalg/io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>
#include <vector>

namespace clalg {

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line), message_(message) {}

namespace {

bool valid_identifier(std::string_view s) {
  static const std::regex pattern("[A-Za-z0-9_]+");
  return std::regex_match(s.begin(), s.end(), pattern);
}

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

class Parser {
 public:
  static constexpr std::size_t kAnyCount = static_cast<std::size_t>(-1);

  explicit Parser(std::string_view text) : lines_(tokenize(text)) {
    const auto nl = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
    eof_line_ = nl + 1;
  }

  AlgebraCandidate run() {
    AlgebraCandidate c;
    const Line& header = expect("algebra", 1);
    c.name = header.tokens[1];

    const Line& elems = expect("elements:", kAnyCount);
    if (elems.tokens.size() < 2) throw ParseError(elems.number, "elements: needs at least one element");
    if (elems.tokens.size() - 1 > kMaxElements) {
      throw ParseError(elems.number, "more than " + std::to_string(kMaxElements) + " elements");
    }
    for (std::size_t i = 1; i < elems.tokens.size(); ++i) {
      const std::string& name = elems.tokens[i];
      if (!valid_identifier(name)) throw ParseError(elems.number, "invalid element name '" + name + "'");
      for (const auto& seen : c.elements) {
        if (seen == name) throw ParseError(elems.number, "duplicate element '" + name + "'");
      }
      c.elements.push_back(name);
    }
    const std::size_t n = c.elements.size();

    c.bot = element(c, expect("bot:", 1), 1);
    c.zero = element(c, expect("zero:", 1), 1);
    c.one = element(c, expect("one:", 1), 1);

    while (peek_keyword("cover:")) {
      const Line& l = expect("cover:", 2);
      const ElementId lo = element(c, l, 1);
      const ElementId hi = element(c, l, 2);
      if (lo == hi) throw ParseError(l.number, "cover endpoints must differ");
      c.covers.emplace_back(lo, hi);
    }
    c.order = OrderRelation::from_covers(n, c.covers);

    expect("mult:", 0);
    c.mult = table(c, "mult");
    if (peek_keyword("imp:")) {
      expect("imp:", 0);
      c.imp = table(c, "imp");
    }
    expect("end", 0);
    if (pos_ < lines_.size()) throw ParseError(lines_[pos_].number, "content after end");
    return c;
  }

 private:
  bool peek_keyword(std::string_view kw) const { return pos_ < lines_.size() && lines_[pos_].tokens[0] == kw; }

  const Line& expect(std::string_view kw, std::size_t args) {
    if (!peek_keyword(kw)) {
      throw ParseError(pos_ < lines_.size() ? lines_[pos_].number : eof_line_, std::string(kw) + " required");
    }
    const Line& l = lines_[pos_++];
    if (args != kAnyCount && l.tokens.size() != args + 1) {
      throw ParseError(l.number, std::string(kw) + " expects " + std::to_string(args) + " argument(s)");
    }
    return l;
  }

  static ElementId element(const AlgebraCandidate& c, const Line& l, std::size_t i) {
    const std::string& name = l.tokens[i];
    for (std::size_t k = 0; k < c.elements.size(); ++k) {
      if (c.elements[k] == name) return ElementId(k);
    }
    throw ParseError(l.number, "unknown element '" + name + "'");
  }

  OperationTable table(const AlgebraCandidate& c, const std::string& what) {
    const std::size_t n = c.elements.size();
    OperationTable t(n);
    for (std::size_t row = 0; row < n; ++row) {
      if (pos_ >= lines_.size()) throw ParseError(eof_line_, what + " table has " + std::to_string(row) + " rows, expected " + std::to_string(n));
      const Line& l = lines_[pos_];
      if (l.tokens[0] == "imp:" || l.tokens[0] == "end") {
        throw ParseError(l.number, what + " table has " + std::to_string(row) + " rows, expected " + std::to_string(n));
      }
      ++pos_;
      if (l.tokens.size() != n) {
        throw ParseError(l.number, what + " row has " + std::to_string(l.tokens.size()) + " entries, expected " +
                                       std::to_string(n));
      }
      for (std::size_t col = 0; col < n; ++col) t.set(ElementId(row), ElementId(col), element(c, l, col));
    }
    return t;
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t eof_line_ = 1;
};

void write_table(std::ostringstream& out, const AlgebraCandidate& c, const OperationTable& t) {
  for (std::size_t x = 0; x < c.size(); ++x) {
    for (std::size_t y = 0; y < c.size(); ++y) {
      if (y > 0) out << ' ';
      out << c.elements[t.at(ElementId(x), ElementId(y)).index()];
    }
    out << '\n';
  }
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

AlgebraCandidate parse_algebra(std::string_view text) { return Parser(text).run(); }

AlgebraCandidate load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

std::string serialize_algebra(const AlgebraCandidate& c) {
  for (const auto& name : c.elements) {
    if (!valid_identifier(name)) throw Error("element name '" + name + "' is not a valid identifier");
  }
  if (c.name.empty() || c.name.find_first_of(" \t\n#") != std::string::npos) {
    throw Error("algebra name '" + c.name + "' cannot be serialized");
  }
  std::ostringstream out;
  out << "algebra " << c.name << '\n';
  out << "elements:";
  for (const auto& name : c.elements) out << ' ' << name;
  out << '\n';
  out << "bot: " << c.elements[c.bot.index()] << '\n';
  out << "zero: " << c.elements[c.zero.index()] << '\n';
  out << "one: " << c.elements[c.one.index()] << '\n';
  for (const auto& [lo, hi] : c.covers) {
    out << "cover: " << c.elements[lo.index()] << ' ' << c.elements[hi.index()] << '\n';
  }
  out << "mult:\n";
  write_table(out, c, c.mult);
  if (c.imp) {
    out << "imp:\n";
    write_table(out, c, *c.imp);
  }
  out << "end\n";
  return out.str();
}

std::string export_dot(const AlgebraCandidate& c, std::optional<ElementId> top) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(c.name) << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (std::size_t x = 0; x < c.size(); ++x) {
    const ElementId e(x);
    std::vector<std::string> roles;
    if (e == c.bot) roles.emplace_back("bot");
    if (e == c.zero) roles.emplace_back("0");
    if (e == c.one) roles.emplace_back("1");
    if (top && e == *top) roles.emplace_back("top");
    std::string label = c.elements[x];
    if (!roles.empty()) {
      label += " (";
      for (std::size_t i = 0; i < roles.size(); ++i) label += (i ? "," : "") + roles[i];
      label += ")";
    }
    out << "  n" << x << " [label=\"" << dot_escape(label) << "\"];\n";
  }
  for (const auto& [lo, hi] : c.order.covers()) out << "  n" << lo.index() << " -> n" << hi.index() << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const Structure& alg) { return export_dot(alg.candidate(), alg.order().maximum()); }

}  // namespace clalg
