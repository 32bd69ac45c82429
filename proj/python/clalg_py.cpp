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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clalg/cli.hpp"
#include "clalg/identities.hpp"
#include "clalg/ideals.hpp"
#include "clalg/io.hpp"
#include "clalg/quotient.hpp"
#include "clalg/search.hpp"
#include "clalg/validator.hpp"

namespace py = pybind11;

namespace clalg {
namespace {

py::list name_list(const AlgebraCandidate& c, const std::vector<ElementId>& xs) {
  py::list out;
  for (ElementId x : xs) out.append(c.elements[x.index()]);
  return out;
}

py::object witness_dict(const AlgebraCandidate& c, const std::optional<Witness>& w) {
  if (!w) return py::none();
  py::dict d;
  d["rule"] = w->rule;
  d["args"] = name_list(c, w->args);
  py::list values;
  for (const auto& [label, v] : w->values) values.append(py::make_tuple(label, c.elements[v.index()]));
  d["values"] = values;
  return std::move(d);
}

py::tuple verdict_tuple(const AlgebraCandidate& c, const Verdict& v) {
  return py::make_tuple(v.pass, witness_dict(c, v.witness));
}

Subset subset_from(const Structure& s, const std::vector<std::string>& names) {
  Subset out = Subset::empty(s.size());
  for (const auto& n : names) out.insert(s.id_of(n));
  return out;
}

py::list subset_names(const AlgebraCandidate& c, Subset s) { return name_list(c, s.elements()); }

FiniteCLAlgebra sealed(const AlgebraCandidate& c) {
  auto outcome = validate(c);
  if (!outcome.algebra) throw Error(c.name + " is not a CL-algebra");
  return *std::move(outcome.algebra);
}

py::dict validate_dict(const AlgebraCandidate& c) {
  const ValidationReport r = validate(c).report;
  AlgebraCandidate resolved = c;
  if (!resolved.imp) {
    if (auto d = derive_implication(c.order, c.mult); std::holds_alternative<OperationTable>(d)) {
      resolved.imp = std::get<OperationTable>(d);
    }
  }
  py::dict d;
  d["lattice"] = verdict_tuple(c, r.lattice);
  d["monoid"] = verdict_tuple(c, r.monoid);
  d["residuation"] = verdict_tuple(resolved, r.residuation);
  d["involution"] = verdict_tuple(resolved, r.involution);
  d["implication_derived"] = r.implication_derived;
  d["ok"] = r.all_pass();
  if (r.flags) {
    d["linear"] = r.flags->linear;
    d["distributive_lattice"] = r.flags->distributive_lattice;
    d["idempotent"] = r.flags->idempotent;
    d["residuated_lattice"] = r.flags->residuated_lattice;
  }
  return d;
}

}  // namespace
}  // namespace clalg

PYBIND11_MODULE(_clalg, m) {
  using namespace clalg;
  m.doc() = "Finite CL-algebra workbench";

  py::register_exception<Error>(m, "ClalgError");

  py::class_<AlgebraCandidate>(m, "Algebra")
      .def_readonly("name", &AlgebraCandidate::name)
      .def_readonly("elements", &AlgebraCandidate::elements)
      .def_property_readonly("size", &AlgebraCandidate::size)
      .def_property_readonly("has_imp", [](const AlgebraCandidate& c) { return c.imp.has_value(); })
      .def("serialize", &serialize_algebra)
      .def("__repr__", [](const AlgebraCandidate& c) {
        return "<Algebra " + c.name + " with " + std::to_string(c.size()) + " elements>";
      });

  m.def("parse", [](const std::string& text) { return parse_algebra(text); }, py::arg("text"));
  m.def("load", &load_algebra, py::arg("path"));
  m.def("validate", &validate_dict, py::arg("algebra"),
        "Axiom verdicts as (pass, witness) pairs plus structural flags.");
  m.def(
      "identities",
      [](const AlgebraCandidate& c) {
        const auto alg = sealed(c);
        const auto resolved = alg.with_implication();
        py::dict out;
        for (const auto& [id, v] : run_identity_suite(alg).results) out[py::str(std::string(to_string(id)))] = verdict_tuple(resolved, v);
        return out;
      },
      py::arg("algebra"));
  m.def(
      "is_ideal",
      [](const AlgebraCandidate& c, const std::vector<std::string>& members) {
        const Structure s(c);
        return verdict_tuple(s.with_implication(), is_ideal(s, subset_from(s, members)));
      },
      py::arg("algebra"), py::arg("members"));
  m.def(
      "all_ideals",
      [](const AlgebraCandidate& c) {
        const Structure s(c);
        py::list out;
        for (const Ideal& i : all_ideals(s)) out.append(subset_names(c, i.members()));
        return out;
      },
      py::arg("algebra"));
  m.def(
      "generated_ideal",
      [](const AlgebraCandidate& c, const std::vector<std::string>& seed) {
        const Structure s(c);
        return subset_names(c, generated_ideal(s, subset_from(s, seed)).members());
      },
      py::arg("algebra"), py::arg("seed"));
  m.def(
      "classify",
      [](const AlgebraCandidate& c, const std::vector<std::string>& members) {
        const Structure s(c);
        const Ideal ideal = certify_ideal(s, subset_from(s, members));
        const auto k = classify(s, ideal);
        py::dict d;
        d["prime"] = k.is_prime;
        d["distributive"] = k.is_distributive;
        d["implicative"] = k.is_implicative;
        d["affine"] = k.is_affine;
        d["zero_downset"] = k.is_zero_downset;
        d["prime_witness"] = witness_dict(s.with_implication(), is_prime(s, ideal).witness);
        return d;
      },
      py::arg("algebra"), py::arg("ideal"));
  m.def(
      "quotient",
      [](const AlgebraCandidate& c, const std::vector<std::string>& members) {
        const auto alg = sealed(c);
        const QuotientAlgebra q = build_quotient(alg, certify_ideal(alg, subset_from(alg, members)));
        py::dict d;
        py::list classes;
        for (const Subset& k : q.congruence.classes) classes.append(subset_names(c, k));
        d["classes"] = classes;
        d["algebra"] = q.algebra.with_implication();
        d["ok"] = q.report.all_pass();
        return d;
      },
      py::arg("algebra"), py::arg("ideal"));
  m.def(
      "theorems",
      [](const AlgebraCandidate& c, const std::vector<std::string>& members) {
        const auto alg = sealed(c);
        const TheoremReport t = theorem_suite(alg, certify_ideal(alg, subset_from(alg, members)));
        py::dict d;
        for (const Claim& claim : t.claims) d[py::str(claim.name)] = std::string(to_string(claim.status));
        return d;
      },
      py::arg("algebra"), py::arg("ideal"));
  m.def(
      "census",
      [](std::size_t size, unsigned threads, bool allow_large) {
        SearchConfig config;
        config.size = size;
        config.threads = threads;
        config.allow_large = allow_large;
        config.count_only = true;
        Census census;
        {
          py::gil_scoped_release release;
          census = count_cl_algebras(config);
        }
        py::list counts;
        for (const auto& r : census.rows) counts.append(r.count);
        py::dict d;
        d["lattices"] = census.lattices.size();
        d["counts"] = counts;
        d["total"] = census.total;
        return d;
      },
      py::arg("size"), py::arg("threads") = 1, py::arg("allow_large") = false);
  m.def(
      "export_dot", [](const AlgebraCandidate& c) { return export_dot(c, c.order.maximum()); },
      py::arg("algebra"));
  m.def(
      "run_command",
      [](const std::vector<std::string>& argv) {
        const CommandResult r = run_command(argv);
        return py::make_tuple(r.exit_code, r.report.dump(), r.output);
      },
      py::arg("argv"), "Runs a cla subcommand; returns (exit_code, report_json, output).");
}
