// Copyright 2026 The skewbrace Authors
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

#include "skb_cli/cli.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "skb/brace.hpp"
#include "skb/enumeration.hpp"
#include "skb/error.hpp"
#include "skb/factorization.hpp"
#include "skb/group_catalog.hpp"
#include "skb/io.hpp"
#include "skb/suites.hpp"
#include "skb/ybe.hpp"

namespace skb::cli {

namespace {

using json = nlohmann::ordered_json;

std::string digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

json to_json(const Subset& s) { return json(std::vector<Elem>(s.elements().begin(), s.elements().end())); }

json to_json(const Permutation& p) {
  return json(std::vector<Elem>(p.images().begin(), p.images().end()));
}

json to_json(const std::vector<Subset>& xs) {
  json out = json::array();
  for (const auto& s : xs) out.push_back(to_json(s));
  return out;
}

json to_json(const MultipermutationVerdict& v) {
  switch (v.kind) {
    case MultipermutationVerdict::Kind::Level:
      return {{"verdict", "level"}, {"value", v.value}};
    case MultipermutationVerdict::Kind::Stalled:
      return {{"verdict", "stalled"}, {"value", v.value}};
    case MultipermutationVerdict::Kind::CapExceeded:
      break;
  }
  return {{"verdict", "cap-exceeded"}, {"value", v.value}};
}

json to_json(const Factorization& f) {
  return {{"b", to_json(f.b)},
          {"c", to_json(f.c)},
          {"b_strong", f.b_strong},
          {"c_strong", f.c_strong},
          {"b_trivial", f.b_trivial},
          {"c_trivial", f.c_trivial}};
}

json class_json(std::optional<std::size_t> cls) { return cls ? json(*cls) : json(nullptr); }

// Collects verdicts and the command-specific payload.
class Report {
 public:
  Report(std::string verb, const std::vector<std::string>& args) {
    doc_["command"] = {{"verb", std::move(verb)}, {"args", args}};
    doc_["inputs"] = json::array();
    doc_["verdicts"] = json::array();
    doc_["result"] = json::object();
  }

  void input(const std::string& path, std::string_view text, std::string_view kind) {
    doc_["inputs"].push_back({{"path", path}, {"kind", kind}, {"digest", digest(text)}});
  }

  void verdict(std::string check, bool passed, const std::vector<Elem>& witness = {},
               const std::string& detail = {}) {
    json v{{"check", std::move(check)}, {"passed", passed}};
    if (!passed) v["witness"] = witness;
    if (!detail.empty()) v["detail"] = detail;
    doc_["verdicts"].push_back(std::move(v));
    failed_ = failed_ || !passed;
  }

  void verdicts(const VerificationReport& r, const std::string& prefix = {}) {
    for (const auto& c : r.checks) verdict(prefix + c.name, c.passed, c.witness, c.detail);
  }

  void error(const std::string& kind, const std::string& message, const std::vector<Elem>& witness) {
    doc_["error"] = {{"kind", kind}, {"message", message}, {"witness", witness}};
  }

  json& result() { return doc_["result"]; }
  bool failed() const { return failed_; }

  std::string finish(int code, double elapsed_ms, bool pretty) {
    doc_["status"] = code == kExitPass ? "pass" : code == kExitCheckFailed ? "fail" : "error";
    doc_["exit_code"] = code;
    doc_["timing"] = {{"elapsed_ms", elapsed_ms}};
    doc_["tool_version"] = tool_version();
    return pretty ? doc_.dump(2) : doc_.dump();
  }

 private:
  json doc_;
  bool failed_ = false;
};

struct Input {
  std::string text;
  FileKind kind;
};

Input load(Report& report, const std::string& path) {
  Input in{read_text_file(path), FileKind::Group};
  in.kind = detect_file_kind(in.text);
  const char* names[] = {"group", "brace", "solution"};
  report.input(path, in.text, names[static_cast<int>(in.kind)]);
  return in;
}

void note_relabeling(Report& report, const Permutation& p) {
  if (!p.is_identity()) report.result()["relabeling"] = to_json(p);
}

SkewBrace load_brace(Report& report, const std::string& path) {
  const Input in = load(report, path);
  switch (in.kind) {
    case FileKind::Brace: {
      auto loaded = parse_brace_json(in.text);
      note_relabeling(report, loaded.relabeling);
      return loaded.brace;
    }
    case FileKind::Group: {
      auto loaded = parse_group_json(in.text);
      note_relabeling(report, loaded.relabeling);
      report.result()["note"] = "group file read as the trivial brace";
      return trivial_brace(loaded.group);
    }
    case FileKind::Solution:
      break;
  }
  throw Error(ErrorKind::InvalidInput, path + " holds a solution, not a brace");
}

json group_json(const GroupTable& g) {
  return {{"order", g.order()}, {"name", identify_group(g)}, {"abelian", g.is_abelian()}};
}

// validate

void cmd_validate(Report& report, const std::string& path) {
  const Input in = load(report, path);
  auto& r = report.result();
  try {
    switch (in.kind) {
      case FileKind::Group: {
        auto loaded = parse_group_json(in.text);
        note_relabeling(report, loaded.relabeling);
        r["group"] = group_json(loaded.group);
        report.verdict("group axioms", true);
        break;
      }
      case FileKind::Brace: {
        auto loaded = parse_brace_json(in.text);
        note_relabeling(report, loaded.relabeling);
        r["additive"] = group_json(loaded.brace.additive());
        r["multiplicative"] = group_json(loaded.brace.multiplicative());
        r["left_brace"] = loaded.brace.is_left_brace();
        report.verdict("skew brace axioms", true);
        break;
      }
      case FileKind::Solution: {
        const Solution s = parse_solution_json(in.text);
        r["size"] = s.size();
        r["involutive"] = is_involutive(s);
        r["nondegenerate"] = is_nondegenerate(s);
        report.verdict("braid relation", true);
        break;
      }
    }
  } catch (const Error& e) {
    if (is_input_error(e.kind())) throw;
    report.verdict(std::string(to_string(e.kind())), false, e.witness(), e.what());
  }
}

// analyze

void cmd_analyze(Report& report, const std::string& path) {
  const SkewBrace a = load_brace(report, path);
  auto& r = report.result();
  r["order"] = a.order();
  r["additive"] = group_json(a.additive());
  r["multiplicative"] = group_json(a.multiplicative());
  r["left_brace"] = a.is_left_brace();
  r["trivial"] = is_trivial(a);

  const auto auts = brace_automorphisms(a);
  json list = json::array();
  for (const auto& s : left_ideals(a)) {
    const IdealReport rep = classify_subset(a, s, auts);
    list.push_back({{"subset", to_json(s)},
                    {"left_ideal", rep.is_left_ideal},
                    {"strong_left_ideal", rep.is_strong_left_ideal},
                    {"ideal", rep.is_ideal},
                    {"trivial_subbrace", rep.is_trivial_subbrace},
                    {"characteristic", rep.is_characteristic}});
  }
  r["left_ideals"] = std::move(list);

  const Subset soc = socle(a);
  const Subset fixed = fix(a);
  r["socle"] = to_json(soc);
  r["fix"] = to_json(fixed);
  r["ker_lambda"] = to_json(ker_lambda(a));
  r["right_series"] = to_json(right_series(a));
  r["right_nilpotency_class"] = class_json(right_nilpotency_class(a));
  r["meta_trivial"] = is_meta_trivial(a);
  r["simple"] = is_simple(a);
  r["characteristically_simple"] = is_characteristically_simple(a);
  r["characteristic_ideals"] = to_json(characteristic_ideals(a));
  r["minimal_ideals"] = to_json(minimal_ideals(a));
  r["automorphism_count"] = auts.size();

  report.verdict("socle is an ideal", is_ideal(a, soc), {soc.elements().begin(), soc.elements().end()});
  report.verdict("fix is a left ideal", is_left_ideal(a, fixed),
                 {fixed.elements().begin(), fixed.elements().end()});
}

// factorize

struct FactorizeFlags {
  bool strong = false;
  bool trivial = false;
  bool allow_improper = false;
  bool verify_ito = false;
  bool verify_class4 = false;
};

void cmd_factorize(Report& report, const std::string& path, const FactorizeFlags& flags) {
  const SkewBrace a = load_brace(report, path);
  FactorizationQuery q;
  q.strong_b = q.strong_c = flags.strong;
  q.trivial_b = q.trivial_c = flags.trivial;
  q.allow_improper = flags.allow_improper;
  const auto found = find_factorizations(a, q);

  json list = json::array();
  for (std::size_t i = 0; i < found.size(); ++i) {
    Factorization f = found[i];
    json entry = to_json(f);
    const std::string tag = "#" + std::to_string(i) + " ";
    if (flags.verify_ito && f.trivial_trivial()) {
      VerificationReport rep = verify_factorization_sums(a, f);
      for (auto& c : verify_trivial_factor_identities(a, f).checks) rep.checks.push_back(c);
      for (auto& c : verify_ito(a, f).checks) rep.checks.push_back(c);
      entry["ito"] = rep.passed();
      report.verdicts(rep, tag);
    }
    if (flags.verify_class4 && f.trivial_trivial()) {
      if (!f.b_strong && f.c_strong) {
        std::swap(f.b, f.c);
        std::swap(f.b_strong, f.c_strong);
      }
      if (f.b_strong) {
        const auto ideal = find_trivializing_ideal(a, f);
        entry["trivializing_ideal"] = ideal ? to_json(*ideal) : json(nullptr);
        report.verdict(tag + "non-zero ideal in Ker lambda inside B or C",
                       ideal.has_value() || is_trivial(a));
        const VerificationReport rep = check_class_four(a, f);
        entry["class4"] = rep.passed();
        report.verdicts(rep, tag);
      }
    }
    list.push_back(std::move(entry));
  }
  report.result()["order"] = a.order();
  report.result()["right_nilpotency_class"] = class_json(right_nilpotency_class(a));
  report.result()["factorizations"] = std::move(list);
}

// solution

struct SolutionFlags {
  std::string export_path;
  bool retract = false;
  bool level = false;
  bool decompose = false;
};

void cmd_solution(Report& report, const std::string& path, const SolutionFlags& flags) {
  const Input in = load(report, path);
  auto& r = report.result();
  std::optional<SkewBrace> brace;
  Solution s;
  if (in.kind == FileKind::Solution) {
    s = parse_solution_json(in.text);
  } else {
    brace = load_brace(report, path);
    report.result()["source"] = "r_A of the brace";
    s = solution_from_brace(*brace);
  }
  r["size"] = s.size();
  r["involutive"] = is_involutive(s);
  r["nondegenerate"] = is_nondegenerate(s);
  r["is_flip"] = s == flip_solution(s.size());

  if (!flags.export_path.empty()) {
    write_text_file(flags.export_path, solution_to_json(s));
    r["exported"] = flags.export_path;
  }
  if (flags.retract) {
    const Retraction ret = retract(s);
    r["retraction"] = {{"size", ret.solution.size()},
                       {"class_of", ret.class_of},
                       {"solution", json::parse(solution_to_json(ret.solution))}};
  }
  if (flags.level) {
    r["multipermutation"] = s.size() < 2 ? json{{"verdict", "level"}, {"value", 0}}
                                         : to_json(multipermutation_level(s));
  }
  if (flags.decompose) {
    json list = json::array();
    if (brace) {
      for (const auto& ideal : strong_left_ideals(*brace)) {
        if (ideal.is_zero() || ideal.is_full()) continue;
        const Decomposition d = decomposition_from_strong_left_ideal(*brace, ideal);
        const bool ok = is_decomposition(s, d.y);
        report.verdict("strong left ideal " + to_string(ideal) + " decomposes r_A", ok,
                       {ideal.elements().begin(), ideal.elements().end()});
        list.push_back({{"y", to_json(d.y)}, {"z", to_json(d.z)}, {"from_strong_left_ideal", true}});
      }
    }
    if (list.empty()) {
      if (const auto d = is_decomposable(s)) {
        list.push_back({{"y", to_json(d->y)}, {"z", to_json(d->z)}, {"from_strong_left_ideal", false}});
      }
    }
    r["decompositions"] = std::move(list);
  }
}

// enumerate

struct EnumerateFlags {
  bool oracle_check = false;
  bool allow_large = false;
  std::string out_dir;
  std::string query;
};

void cmd_enumerate(Report& report, std::size_t n, const EnumerateFlags& flags) {
  EnumerationOptions opts;
  opts.allow_large = flags.allow_large;
  const BraceCatalog cat = braces_of_order(n, opts);
  auto& r = report.result();
  r["order"] = n;
  r["count"] = cat.entries.size();
  r["provenance"] = to_string(cat.provenance);
  std::size_t left = 0;
  json list = json::array();
  for (std::size_t i = 0; i < cat.entries.size(); ++i) {
    const auto& e = cat.entries[i];
    left += e.brace.is_left_brace();
    list.push_back({{"index", i},
                    {"add", e.add_name},
                    {"mult", e.mult_name},
                    {"left_brace", e.brace.is_left_brace()},
                    {"trivial", is_trivial(e.brace)},
                    {"right_nilpotency_class", class_json(right_nilpotency_class(e.brace))}});
  }
  r["left_braces"] = left;
  r["entries"] = std::move(list);
  if (!flags.query.empty()) {
    json matches = json::array();
    for (const auto& m : catalog_query(cat, flags.query)) {
      for (std::size_t i = 0; i < cat.entries.size(); ++i) {
        if (cat.entries[i].brace.additive() == m.brace.additive() &&
            cat.entries[i].brace.multiplicative() == m.brace.multiplicative()) {
          matches.push_back(i);
        }
      }
    }
    r["query"] = {{"predicates", flags.query}, {"matches", std::move(matches)}};
  }
  if (flags.oracle_check) {
    const BraceCatalog oracle = brute_force_oracle(n);
    r["oracle_count"] = oracle.entries.size();
    report.verdict("holomorph catalog equals brute-force oracle", catalogs_match(cat, oracle),
                   {static_cast<Elem>(cat.entries.size()), static_cast<Elem>(oracle.entries.size())});
  }
  if (!flags.out_dir.empty()) {
    export_catalog(cat, flags.out_dir);
    r["exported"] = flags.out_dir;
  }
}

// suite

void cmd_suite(Report& report, const std::string& name, std::size_t n, bool keep_going,
               bool allow_large) {
  SuiteOptions so;
  so.keep_going = keep_going;
  EnumerationOptions eo;
  eo.allow_large = allow_large;
  const SuiteReport rep = run_suite(name, n, so, eo);
  auto& r = report.result();
  r["suite"] = rep.name;
  r["max_order"] = n;
  r["braces"] = rep.braces;
  r["cases"] = rep.cases;
  r["vacuous"] = rep.cases == 0;
  json failures = json::array();
  for (const auto& f : rep.failures) {
    failures.push_back({{"order", f.order},
                        {"brace_index", f.brace_index},
                        {"check", f.check},
                        {"witness", f.witness},
                        {"detail", f.detail}});
    report.verdict(f.check, false, f.witness,
                   "order " + std::to_string(f.order) + ", brace " + std::to_string(f.brace_index));
  }
  r["failures"] = std::move(failures);
  if (rep.failures.empty()) report.verdict("suite " + rep.name, true);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite skew left braces: validation, ideals, factorizations, Yang-Baxter solutions",
               "skb"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON report");
  app.set_version_flag("--version", std::string(tool_version()));

  std::string path;
  auto* validate = app.add_subcommand("validate", "Validate a group, brace or solution file");
  validate->add_option("path", path, "Input JSON file")->required();

  auto* analyze = app.add_subcommand("analyze", "Ideals, socle, right series and simplicity");
  analyze->add_option("path", path, "Brace (or group) JSON file")->required();

  FactorizeFlags ff;
  auto* factorize = app.add_subcommand("factorize", "Find factorizations A = B + C by left ideals");
  factorize->add_option("path", path, "Brace JSON file")->required();
  factorize->add_flag("--strong", ff.strong, "Both factors strong left ideals");
  factorize->add_flag("--trivial", ff.trivial, "Both factors trivial sub-braces");
  factorize->add_flag("--allow-improper", ff.allow_improper, "Admit B = A or C = A");
  factorize->add_flag("--verify-ito", ff.verify_ito, "Verify products and class bounds");
  factorize->add_flag("--verify-class4", ff.verify_class4, "Verify trivializing ideal and class <= 4");

  SolutionFlags sf;
  auto* solution = app.add_subcommand("solution", "Yang-Baxter analyses of r_A or a solution file");
  solution->add_option("path", path, "Brace or solution JSON file")->required();
  solution->add_option("--export", sf.export_path, "Write the solution to this file");
  solution->add_flag("--retract", sf.retract, "Compute the retraction");
  solution->add_flag("--level", sf.level, "Multipermutation level");
  solution->add_flag("--decompose", sf.decompose, "Decompositions of the solution");

  std::size_t n = 0;
  EnumerateFlags ef;
  auto* enumerate = app.add_subcommand("enumerate", "Skew braces of order n up to isomorphism");
  enumerate->add_option("n", n, "Order")->required();
  enumerate->add_flag("--oracle-check", ef.oracle_check, "Compare with the brute-force oracle (n <= 6)");
  enumerate->add_flag("--allow-large", ef.allow_large, "Admit orders above the cap");
  enumerate->add_option("--out", ef.out_dir, "Export the catalog to this directory");
  enumerate->add_option("--query", ef.query, "Comma-separated catalog predicates");

  std::string suite_name;
  bool keep_going = false;
  bool suite_large = false;
  auto* suite = app.add_subcommand("suite", "Run a named theorem suite over orders 1..n");
  suite->add_option("name", suite_name, "Suite name")->required();
  suite->add_option("n", n, "Largest order")->required();
  suite->add_flag("--keep-going", keep_going, "Collect every failure");
  suite->add_flag("--allow-large", suite_large, "Admit orders above the cap");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  auto* sub = app.get_subcommands().front();
  Report report(sub->get_name(), args);
  const auto start = std::chrono::steady_clock::now();
  int code = kExitPass;
  try {
    if (sub == validate) {
      cmd_validate(report, path);
    } else if (sub == analyze) {
      cmd_analyze(report, path);
    } else if (sub == factorize) {
      cmd_factorize(report, path, ff);
    } else if (sub == solution) {
      cmd_solution(report, path, sf);
    } else if (sub == enumerate) {
      cmd_enumerate(report, n, ef);
    } else {
      cmd_suite(report, suite_name, n, keep_going, suite_large);
    }
    code = report.failed() ? kExitCheckFailed : kExitPass;
  } catch (const Error& e) {
    report.error(std::string(to_string(e.kind())), e.what(), e.witness());
    code = is_input_error(e.kind()) ? kExitUsage : kExitCheckFailed;
  } catch (const std::exception& e) {
    report.error("InvalidInput", e.what(), {});
    code = kExitUsage;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << report.finish(code, ms, pretty) << '\n';
  return code;
}

}  // namespace skb::cli
