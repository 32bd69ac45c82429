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

#include "clalg/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "clalg/identities.hpp"
#include "clalg/ideals.hpp"
#include "clalg/io.hpp"
#include "clalg/quotient.hpp"
#include "clalg/replay.hpp"
#include "clalg/search.hpp"
#include "clalg/validator.hpp"

namespace clalg {

namespace {

/// Thrown for failures that must map to exit code 2.
struct UsageError : Error {
  using Error::Error;
};

// Serializes witnesses and remembers them so --replay can re-check each one.
class Session {
 public:
  explicit Session(bool replay) : replay_(replay) {}

  Json names(const AlgebraCandidate& c, const std::vector<ElementId>& xs) const {
    Json out = Json::array();
    for (ElementId x : xs) out.push_back(c.elements[x.index()]);
    return out;
  }

  Json names(const AlgebraCandidate& c, Subset s) const { return names(c, s.elements()); }

  Json witness(const AlgebraCandidate& c, const Witness& w, std::optional<Subset> subset = std::nullopt) {
    Json out;
    out["rule"] = w.rule;
    out["args"] = names(c, w.args);
    if (!w.values.empty()) {
      Json values = Json::object();
      for (const auto& [label, v] : w.values) {
        if (label == "maximal") {
          values[label].push_back(c.elements[v.index()]);
        } else {
          values[label] = c.elements[v.index()];
        }
      }
      out["values"] = std::move(values);
    }
    if (replay_) pending_.push_back({c, w, subset});
    return out;
  }

  Json verdict(const AlgebraCandidate& c, const Verdict& v, std::optional<Subset> subset = std::nullopt) {
    Json out;
    out["pass"] = v.pass;
    if (v.witness) out["witness"] = witness(c, *v.witness, subset);
    return out;
  }

  /// Adds the replay section; an unconfirmed witness fails the report.
  void finish(Json& report) {
    if (!replay_) return;
    Json section;
    std::size_t confirmed = 0;
    Json failures = Json::array();
    for (const auto& p : pending_) {
      bool ok = false;
      try {
        ok = replay(p.candidate, p.witness, p.subset);
      } catch (const Error&) {
        ok = false;
      }
      if (ok) {
        ++confirmed;
      } else {
        failures.push_back(p.witness.rule);
      }
    }
    section["checked"] = pending_.size();
    section["confirmed"] = confirmed;
    if (!failures.empty()) {
      section["unconfirmed"] = std::move(failures);
      report["ok"] = false;
    }
    report["replay"] = std::move(section);
  }

 private:
  struct Pending {
    AlgebraCandidate candidate;
    Witness witness;
    std::optional<Subset> subset;
  };
  bool replay_;
  std::vector<Pending> pending_;
};

AlgebraCandidate load(const std::string& path) {
  try {
    return load_algebra(path);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

Json validation_json(Session& session, const AlgebraCandidate& c, const ValidationReport& r) {
  Json out;
  out["lattice"] = session.verdict(c, r.lattice);
  out["monoid"] = session.verdict(c, r.monoid);
  // Replays against the implication the validator actually used.
  AlgebraCandidate with_imp = c;
  if (!with_imp.imp) {
    if (auto d = derive_implication(c.order, c.mult); std::holds_alternative<OperationTable>(d)) {
      with_imp.imp = std::get<OperationTable>(d);
    }
  }
  out["residuation"] = session.verdict(with_imp, r.residuation);
  out["involution"] = session.verdict(with_imp, r.involution);
  out["implication_derived"] = r.implication_derived;
  out["promoted"] = r.all_pass();
  if (r.top) out["top"] = c.elements[r.top->index()];
  if (r.flags) {
    out["flags"] = {{"linear", r.flags->linear},
                    {"distributive_lattice", r.flags->distributive_lattice},
                    {"idempotent", r.flags->idempotent},
                    {"residuated_lattice", r.flags->residuated_lattice}};
  }
  return out;
}

Json table_json(const AlgebraCandidate& c, const OperationTable& t) {
  Json rows = Json::array();
  for (std::size_t x = 0; x < c.size(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < c.size(); ++y) row.push_back(c.elements[t.at(ElementId(x), ElementId(y)).index()]);
    rows.push_back(std::move(row));
  }
  return rows;
}

Json classification_json(const IdealClassification& k) {
  return {{"prime", k.is_prime},
          {"distributive", k.is_distributive},
          {"implicative", k.is_implicative},
          {"affine", k.is_affine},
          {"zero_downset", k.is_zero_downset}};
}

Subset subset_arg(const Structure& s, const std::string& list) {
  try {
    return parse_subset(s, list);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

void cmd_validate(Session& session, Json& report, const std::string& file) {
  const auto c = load(file);
  const auto outcome = validate(c);
  report["algebra"] = c.name;
  report["validation"] = validation_json(session, c, outcome.report);
  report["ok"] = outcome.report.all_pass();
}

void cmd_derive_imp(Session& session, Json& report, const std::string& file) {
  const auto c = load(file);
  report["algebra"] = c.name;
  auto derived = derive_implication(c.order, c.mult);
  if (const auto* nr = std::get_if<NoResidual>(&derived)) {
    Witness w{"no_residual", {nr->x, nr->y}, {}};
    for (ElementId m : nr->maximal) w.values.emplace_back("maximal", m);
    report["derivation"] = session.verdict(c, Verdict::fail(w));
    report["ok"] = false;
    return;
  }
  const auto& imp = std::get<OperationTable>(derived);
  report["derivation"] = {{"pass", true}};
  report["imp"] = table_json(c, imp);
  bool ok = true;
  if (c.imp) {
    Json mismatches = Json::array();
    for (std::size_t x = 0; x < c.size(); ++x) {
      for (std::size_t y = 0; y < c.size(); ++y) {
        const ElementId printed = c.imp->at(ElementId(x), ElementId(y));
        const ElementId residual = imp.at(ElementId(x), ElementId(y));
        if (printed == residual) continue;
        mismatches.push_back(session.witness(
            c, {"imp_mismatch", {ElementId(x), ElementId(y)}, {{"given", printed}, {"derived", residual}}}));
      }
    }
    ok = mismatches.empty();
    report["mismatches"] = std::move(mismatches);
  }
  report["ok"] = ok;
}

void cmd_identities(Session& session, Json& report, const std::string& file) {
  const auto c = load(file);
  report["algebra"] = c.name;
  const auto outcome = validate(c);
  if (!outcome.algebra) {
    report["validation"] = validation_json(session, c, outcome.report);
    report["error"] = "identities require a validated CL-algebra";
    report["ok"] = false;
    return;
  }
  const auto suite = run_identity_suite(*outcome.algebra);
  const auto resolved = outcome.algebra->with_implication();
  Json ids = Json::object();
  for (const auto& [id, v] : suite.results) ids[std::string(to_string(id))] = session.verdict(resolved, v);
  report["identities"] = std::move(ids);
  report["ok"] = suite.all_pass();
}

void cmd_ideals(Session& session, Json& report, const std::string& file, bool with_classes,
                const std::string& generate, const std::string& check) {
  const auto c = load(file);
  report["algebra"] = c.name;
  const Structure s(c);
  const auto resolved = s.with_implication();
  report["validated"] = validate(c).algebra.has_value();
  Json list = Json::array();
  for (const Ideal& ideal : all_ideals(s)) {
    Json entry;
    entry["members"] = session.names(c, ideal.members());
    if (with_classes) {
      entry["classification"] = classification_json(classify(s, ideal));
      const Verdict prime = is_prime(s, ideal);
      if (!prime.pass) entry["prime_witness"] = session.witness(resolved, *prime.witness, ideal.members());
    }
    list.push_back(std::move(entry));
  }
  report["ideals"] = std::move(list);
  bool ok = true;
  if (!generate.empty()) {
    const Subset seed = subset_arg(s, generate);
    report["generated"] = {{"seed", session.names(c, seed)},
                           {"ideal", session.names(c, generated_ideal(s, seed).members())}};
  }
  if (!check.empty()) {
    const Subset subset = subset_arg(s, check);
    if (subset.is_empty()) throw UsageError("--check needs a nonempty subset");
    const Verdict v = is_ideal(s, subset);
    report["check"] = {{"subset", session.names(c, subset)}, {"is_ideal", session.verdict(resolved, v, subset)}};
    ok = v.pass;
  }
  report["ok"] = ok;
}

Json congruence_json(Session& session, const AlgebraCandidate& resolved, const Congruence& cong) {
  Json out;
  out["equivalence"] = session.verdict(resolved, cong.equivalence, cong.ideal);
  out["compatibility"] = session.verdict(resolved, cong.compatibility, cong.ideal);
  Json classes = Json::array();
  for (const Subset& cls : cong.classes) classes.push_back(session.names(resolved, cls));
  out["classes"] = std::move(classes);
  return out;
}

/// Returns the certified ideal, or writes the failing verdict and returns nullopt.
std::optional<Ideal> ideal_arg(Session& session, Json& report, const Structure& s, const std::string& list) {
  const Subset subset = subset_arg(s, list);
  if (subset.is_empty()) throw UsageError("--ideal needs a nonempty subset");
  const Verdict v = is_ideal(s, subset);
  report["ideal"] = session.names(s.candidate(), subset);
  if (!v.pass) {
    report["is_ideal"] = session.verdict(s.with_implication(), v, subset);
    report["ok"] = false;
    return std::nullopt;
  }
  return certify_ideal(s, subset);
}

void cmd_quotient(Session& session, Json& report, const std::string& file, const std::string& ideal_list,
                  bool verify, const std::string& dot_path) {
  const auto c = load(file);
  report["algebra"] = c.name;
  const Structure s(c);
  const auto resolved = s.with_implication();
  const auto ideal = ideal_arg(session, report, s, ideal_list);
  if (!ideal) return;
  const Congruence cong = congruence_from_ideal(s, *ideal);
  report["congruence"] = congruence_json(session, resolved, cong);
  if (!cong.certified()) {
    report["ok"] = false;
    return;
  }
  try {
    const QuotientAlgebra q = build_quotient(s, *ideal);
    const auto& qc = q.algebra.candidate();
    Json quotient;
    quotient["elements"] = qc.elements;
    quotient["size"] = qc.size();
    quotient["bot"] = qc.elements[qc.bot.index()];
    quotient["zero"] = qc.elements[qc.zero.index()];
    quotient["one"] = qc.elements[qc.one.index()];
    quotient["top"] = qc.elements[q.algebra.top().index()];
    Json projection = Json::object();
    for (ElementId x : s.universe()) projection[s.element_name(x)] = qc.elements[q.projection[x.index()].index()];
    quotient["projection"] = std::move(projection);
    quotient["mult"] = table_json(qc, qc.mult);
    quotient["imp"] = table_json(qc, *qc.imp);
    if (verify) quotient["validation"] = validation_json(session, qc, q.report);
    report["quotient"] = std::move(quotient);
    if (!dot_path.empty()) {
      std::ofstream out(dot_path);
      if (!out) throw UsageError("cannot write " + dot_path);
      out << export_dot(q.algebra);
      report["dot"] = dot_path;
    }
    report["ok"] = true;
  } catch (const QuotientInvalid& e) {
    report["quotient_invalid"] = e.what();
    if (e.order_witness()) {
      report["order_witness"] = session.witness(resolved, *e.order_witness(), ideal->members());
    }
    report["quotient_validation"] = validation_json(session, resolved, e.report());
    report["ok"] = false;
  }
}

void cmd_theorems(Session& session, Json& report, const std::string& file, const std::string& ideal_list) {
  const auto c = load(file);
  report["algebra"] = c.name;
  const auto outcome = validate(c);
  if (!outcome.algebra) {
    report["validation"] = validation_json(session, c, outcome.report);
    report["error"] = "quotient theorems require a validated CL-algebra";
    report["ok"] = false;
    return;
  }
  const FiniteCLAlgebra& alg = *outcome.algebra;
  const auto resolved = alg.with_implication();
  std::vector<Ideal> ideals;
  if (!ideal_list.empty()) {
    auto one = ideal_arg(session, report, alg, ideal_list);
    if (!one) return;
    ideals.push_back(*one);
  } else {
    ideals = all_ideals(alg);
  }
  bool ok = true;
  Json results = Json::array();
  for (const Ideal& ideal : ideals) {
    Json entry;
    entry["ideal"] = session.names(c, ideal.members());
    entry["classification"] = classification_json(classify(alg, ideal));
    try {
      const TheoremReport t = theorem_suite(alg, ideal);
      Json claims = Json::object();
      for (const Claim& claim : t.claims) {
        Json cj;
        cj["status"] = std::string(to_string(claim.status));
        if (claim.witness) cj["witness"] = session.witness(resolved, *claim.witness, ideal.members());
        claims[claim.name] = std::move(cj);
      }
      entry["claims"] = std::move(claims);
      const QuotientAlgebra q = build_quotient(alg, ideal);
      bool criterion = true;
      for (ElementId x : alg.universe()) {
        for (ElementId y : alg.universe()) {
          const auto [left, right] = check_order_criterion(alg, ideal, q, x, y);
          criterion = criterion && left == right;
        }
      }
      entry["order_criterion"] = criterion;
      ok = ok && !t.any_violated() && criterion;
    } catch (const NotACongruence& e) {
      entry["finding"] = std::string("not a congruence: ") + e.what();
      entry["witness"] = session.witness(resolved, e.witness(), ideal.members());
      ok = false;
    } catch (const QuotientInvalid& e) {
      entry["finding"] = std::string("quotient invalid: ") + e.what();
      ok = false;
    }
    results.push_back(std::move(entry));
  }
  report["theorems"] = std::move(results);
  report["ok"] = ok;
}

void cmd_search(Json& report, const SearchConfig& config) {
  const Census census = count_cl_algebras(config);
  report["size"] = census.size;
  report["lattices"] = census.lattices.size();
  Json rows = Json::array();
  for (const auto& r : census.rows) rows.push_back({{"size", r.size}, {"lattice_index", r.lattice_index}, {"count", r.count}});
  report["census"] = std::move(rows);
  report["total"] = census.total;
  if (!config.count_only) {
    Json algebras = Json::array();
    for (const auto& e : census.algebras) {
      algebras.push_back({{"lattice_index", e.lattice_index}, {"canonical_form", e.form.to_string()}});
    }
    report["algebras"] = std::move(algebras);
    report["truncated"] = census.truncated;
  }
  report["ok"] = true;
}

void cmd_export_dot(Json& report, const std::string& file, const std::string& out_path) {
  const auto c = load(file);
  report["algebra"] = c.name;
  std::string dot = export_dot(c, c.order.maximum());
  report["edges"] = c.order.covers().size();
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    out << dot;
    report["path"] = out_path;
  } else {
    report["dot"] = std::move(dot);
  }
  report["ok"] = true;
}

void render(std::ostringstream& out, const Json& value, int indent);

bool is_verdict(const Json& v) { return v.is_object() && v.contains("pass") && v["pass"].is_boolean(); }

std::string render_witness(const Json& w) {
  std::string s = w["rule"].get<std::string>() + "(";
  for (std::size_t i = 0; i < w["args"].size(); ++i) s += (i ? "," : "") + w["args"][i].get<std::string>();
  s += ")";
  if (w.contains("values")) {
    s += " where";
    for (const auto& [label, v] : w["values"].items()) {
      s += " " + label + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    }
  }
  return s;
}

// Arrays under these keys are subsets of the universe and print in braces.
bool is_set_key(const std::string& key) {
  return key == "members" || key == "ideal" || key == "subset" || key == "seed" || key == "classes";
}

std::string scalar(const Json& v, bool as_set = false) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = as_set ? "{" : "";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? (as_set ? "," : " ") : "") + scalar(v[i]);
    return as_set ? s + "}" : s;
  }
  return v.dump();
}

bool is_flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  return std::all_of(v.begin(), v.end(), [](const Json& e) { return !e.is_object() && !e.is_array(); });
}

void render(std::ostringstream& out, const Json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& [key, v] : value.items()) {
    if (key == "schema_version" || key == "argv") continue;
    if (is_verdict(v)) {
      out << pad << key << ": " << (v["pass"].get<bool>() ? "PASS" : "FAIL");
      if (v.contains("witness")) out << "  " << render_witness(v["witness"]);
      out << '\n';
    } else if (v.is_object() && v.contains("rule") && v.contains("args")) {
      out << pad << key << ": " << render_witness(v) << '\n';
    } else if (key == "dot" && v.is_string() && v.get<std::string>().starts_with("digraph")) {
      out << v.get<std::string>();
    } else if (is_flat(v)) {
      out << pad << key << ": " << scalar(v, is_set_key(key)) << '\n';
    } else if (v.is_object()) {
      out << pad << key << ":\n";
      render(out, v, indent + 1);
    } else {
      out << pad << key << ":\n";
      for (const auto& item : v) {
        if (item.is_object()) {
          if (item.size() == 2 && item.contains("rule")) {
            out << pad << "  - " << render_witness(item) << '\n';
            continue;
          }
          out << pad << "  -\n";
          render(out, item, indent + 2);
        } else {
          out << pad << "  - " << scalar(item, is_set_key(key)) << '\n';
        }
      }
    }
  }
}

}  // namespace

int exit_code_for(const Json& report) {
  if (report.contains("error_kind")) {
    const auto kind = report["error_kind"].get<std::string>();
    if (kind == "usage" || kind == "parse") return 2;
  }
  return report.value("ok", false) ? 0 : 1;
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(out, report, 0);
  return out.str();
}

CommandResult run_command(const std::vector<std::string>& argv) {
  const auto started = std::chrono::steady_clock::now();
  CLI::App app{"Finite CL-algebra workbench", "cla"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  bool replay_witnesses = false;
  app.add_flag("--json", json, "Print the machine-readable report");
  app.add_flag("--replay", replay_witnesses, "Re-check every printed witness against the tables");

  std::string file, ideal_list, generate, check, dot_path, out_path;
  bool classify_ideals = false, verify = false;
  SearchConfig config;
  std::size_t max_results = 0;

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "Algebra file (.cla)")->required(); };
  auto* validate_cmd = app.add_subcommand("validate", "Check the four CL axioms");
  add_file(validate_cmd);
  auto* derive_cmd = app.add_subcommand("derive-imp", "Derive the implication table by residuation");
  add_file(derive_cmd);
  auto* identities_cmd = app.add_subcommand("identities", "Check the derived identities");
  add_file(identities_cmd);
  auto* ideals_cmd = app.add_subcommand("ideals", "Enumerate and classify ideals");
  add_file(ideals_cmd);
  ideals_cmd->add_flag("--classify", classify_ideals, "Classify every ideal");
  ideals_cmd->add_option("--generate", generate, "Ideal generated by a comma-separated list");
  ideals_cmd->add_option("--check", check, "Check whether a comma-separated list is an ideal");
  auto* quotient_cmd = app.add_subcommand("quotient", "Build the quotient by an ideal");
  add_file(quotient_cmd);
  quotient_cmd->add_option("--ideal", ideal_list, "Comma-separated ideal members")->required();
  quotient_cmd->add_flag("--verify", verify, "Include the quotient's validation report");
  quotient_cmd->add_option("--dot", dot_path, "Write the quotient's Hasse diagram");
  auto* theorems_cmd = app.add_subcommand("theorems", "Check the quotient theorems");
  add_file(theorems_cmd);
  theorems_cmd->add_option("--ideal", ideal_list, "Comma-separated ideal members (default: every ideal)");
  auto* search_cmd = app.add_subcommand("search", "Enumerate CL-algebras up to isomorphism");
  search_cmd->add_option("--size", config.size, "Number of elements")->required();
  search_cmd->add_flag("--count-only", config.count_only, "Print only the census");
  search_cmd->add_option("--max-results", max_results, "List at most this many algebras");
  search_cmd->add_flag("--allow-large", config.allow_large, "Permit sizes up to 8");
  search_cmd->add_option("--threads", config.threads, "Worker threads");
  auto* dot_cmd = app.add_subcommand("export-dot", "Hasse diagram in Graphviz DOT");
  add_file(dot_cmd);
  dot_cmd->add_option("-o,--output", out_path, "Write to a file instead of the report");

  Json report;
  report["schema_version"] = kReportSchemaVersion;
  report["argv"] = argv;
  Session session(false);
  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
    session = Session(replay_witnesses);
    CLI::App* sub = app.get_subcommands().front();
    report["command"] = sub->get_name();
    if (sub == validate_cmd) {
      cmd_validate(session, report, file);
    } else if (sub == derive_cmd) {
      cmd_derive_imp(session, report, file);
    } else if (sub == identities_cmd) {
      cmd_identities(session, report, file);
    } else if (sub == ideals_cmd) {
      cmd_ideals(session, report, file, classify_ideals, generate, check);
    } else if (sub == quotient_cmd) {
      cmd_quotient(session, report, file, ideal_list, verify, dot_path);
    } else if (sub == theorems_cmd) {
      cmd_theorems(session, report, file, ideal_list);
    } else if (sub == search_cmd) {
      if (max_results > 0) config.max_results = max_results;
      cmd_search(report, config);
    } else if (sub == dot_cmd) {
      cmd_export_dot(report, file, out_path);
    }
    session.finish(report);
  } catch (const CLI::CallForHelp&) {
    return {0, report, app.help()};
  } catch (const CLI::ParseError& e) {
    report["error"] = e.what();
    report["error_kind"] = "usage";
    report["ok"] = false;
  } catch (const UsageError& e) {
    report["error"] = e.what();
    report["error_kind"] = "usage";
    report["ok"] = false;
  } catch (const SizeOutOfRange& e) {
    report["error"] = e.what();
    report["error_kind"] = "usage";
    report["ok"] = false;
  } catch (const Error& e) {
    report["error"] = e.what();
    report["error_kind"] = "property";
    report["ok"] = false;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
  report["timing_ms"] = elapsed.count();

  CommandResult result;
  result.exit_code = exit_code_for(report);
  if (json) {
    result.output = report.dump(2) + "\n";
  } else if (report.value("command", "") == "export-dot" && report.contains("dot")) {
    result.output = report["dot"].get<std::string>();
  } else {
    result.output = render_text(report);
  }
  result.report = std::move(report);
  return result;
}

}  // namespace clalg
