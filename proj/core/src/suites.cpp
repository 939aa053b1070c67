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

#include "skb/suites.hpp"

#include <functional>
#include <map>

#include "skb/factorization.hpp"
#include "skb/group_catalog.hpp"
#include "skb/ybe.hpp"

namespace skb {

namespace {

struct Stop {};

class Runner {
 public:
  Runner(std::string name, const SuiteOptions& options) : options_(options) {
    report_.name = std::move(name);
  }

  void at(std::size_t order, std::size_t index) {
    order_ = order;
    index_ = index;
  }

  void expect(bool ok, std::string check, std::vector<Elem> witness = {}, std::string detail = {}) {
    if (ok) return;
    report_.failures.push_back({order_, index_, std::move(check), std::move(witness), std::move(detail)});
    if (!options_.keep_going) throw Stop{};
  }

  void expect(const VerificationReport& r) {
    for (const auto& c : r.checks) expect(c.passed, c.name, c.witness, c.detail);
  }

  SuiteReport& report() { return report_; }

 private:
  SuiteOptions options_;
  SuiteReport report_;
  std::size_t order_ = 0, index_ = 0;
};

using BraceCheck = std::function<void(Runner&, const SkewBrace&)>;

void lemmas(Runner& run, const SkewBrace& a) {
  const std::size_t n = a.order();
  ++run.report().cases;
  for (Elem x = 0; x < n; ++x) {
    const Elem xp = a.circ_inverse(x);
    run.expect(a.lambda(x)(xp) == a.neg(x), "lambda_a(a') = -a", {x});
    for (Elem y = 0; y < n; ++y) {
      run.expect(a.circ(x, y) == a.add(x, a.lambda(x)(y)), "a o b = a + lambda_a(b)", {x, y});
      run.expect(a.add(x, y) == a.circ(x, a.lambda(x).inverse()(y)),
                 "a + b = a o lambda_a^-1(b)", {x, y});
      run.expect(a.lambda(a.circ(x, y)) == a.lambda(x) * a.lambda(y),
                 "lambda_{a o b} = lambda_a lambda_b", {x, y});
      // a o b o a' = a + lambda_a(b + b * a') - a
      const Elem conj = a.circ(a.circ(x, y), xp);
      const Elem rhs = a.sub(a.add(x, a.lambda(x)(a.add(y, a.star(y, xp)))), x);
      run.expect(conj == rhs, "a o b o a' = a + lambda_a(b + b * a') - a", {x, y});
      for (Elem z = 0; z < n; ++z) {
        const Elem l1 = a.star(x, a.add(y, z));
        const Elem r1 = a.sub(a.add(a.add(a.star(x, y), y), a.star(x, z)), y);
        run.expect(l1 == r1, "x * (y + z) = x * y + y + x * z - y", {x, y, z});
        const Elem l2 = a.star(a.circ(x, y), z);
        const Elem r2 = a.add(a.add(a.star(x, a.star(y, z)), a.star(y, z)), a.star(x, z));
        run.expect(l2 == r2, "(x o y) * z = x * (y * z) + y * z + x * z", {x, y, z});
      }
    }
  }
}

std::vector<Factorization> trivial_trivial(const SkewBrace& a) {
  FactorizationQuery q;
  q.trivial_b = q.trivial_c = true;
  return find_factorizations(a, q);
}

void lemma22(Runner& run, const SkewBrace& a) {
  for (const auto& f : trivial_trivial(a)) {
    ++run.report().cases;
    run.expect(verify_factorization_sums(a, f));
    run.expect(verify_trivial_factor_identities(a, f));
  }
}

void ito(Runner& run, const SkewBrace& a) {
  for (const auto& f : trivial_trivial(a)) {
    ++run.report().cases;
    run.expect(verify_ito(a, f));
  }
}

void itocor(Runner& run, const SkewBrace& a) {
  for (auto f : trivial_trivial(a)) {
    if (!f.b_strong && f.c_strong) {
      std::swap(f.b, f.c);
      std::swap(f.b_strong, f.c_strong);
      std::swap(f.b_trivial, f.c_trivial);
    }
    if (!f.b_strong) continue;
    ++run.report().cases;
    const auto ideal = find_trivializing_ideal(a, f);
    run.expect(ideal.has_value() || is_trivial(a),
               "B or C contains a non-zero ideal acting trivially");
    run.expect(check_class_four(a, f));
  }
}

void decomposable(Runner& run, const SkewBrace& a) {
  const Solution s = solution_from_brace(a);
  bool any = false;
  for (const auto& i : strong_left_ideals(a)) {
    if (i.is_zero() || i.is_full()) continue;
    any = true;
    ++run.report().cases;
    bool ok = true;
    try {
      decomposition_from_strong_left_ideal(a, i);
    } catch (const Error&) {
      ok = false;
    }
    run.expect(ok, "I u A\\I decomposes (A, r_A)", {i.elements().begin(), i.elements().end()});
  }
  if (any) run.expect(is_decomposable(s).has_value(), "r_A is decomposable");
}

void solutions(Runner& run, const SkewBrace& a) {
  ++run.report().cases;
  bool valid = true;
  Solution s;
  try {
    s = solution_from_brace(a);
  } catch (const Error& e) {
    valid = false;
    run.expect(false, "r_A satisfies the braid relation", e.witness());
  }
  if (!valid) return;
  run.expect(is_nondegenerate(s), "r_A is non-degenerate");
  run.expect(is_involutive(s) == a.is_left_brace(), "r_A involutive iff (A,+) abelian");
}

void multiperm(Runner& run, const SkewBrace& a) {
  if (!a.is_left_brace() || a.order() < 2) return;
  ++run.report().cases;
  const auto verdict = multipermutation_level(solution_from_brace(a));
  const auto cls = right_nilpotency_class(a);
  if (cls) {
    run.expect(verdict.kind == MultipermutationVerdict::Kind::Level && verdict.value + 1 == *cls,
               "level of r_A = right class - 1",
               {static_cast<Elem>(*cls), static_cast<Elem>(verdict.value)});
  } else {
    run.expect(verdict.kind == MultipermutationVerdict::Kind::Stalled,
               "r_A stalls when A is not right nilpotent");
  }
}

void soc_fix(Runner& run, const SkewBrace& a) {
  const Subset fixed = fix(a);
  for (const auto& f : trivial_trivial(a)) {
    ++run.report().cases;
    run.expect(is_factorized_left_ideal(a, f, fixed), "Fix(A) is factorized");
    if (a.is_left_brace()) run.expect(check_soc_factorized(a, f), "Soc(A) is factorized");
  }
}

void charsimple(Runner& run, const SkewBrace& a) {
  if (a.order() < 2) return;
  ++run.report().cases;
  const bool cs = is_characteristically_simple(a);
  const bool power = decompose_as_power_of_simple(a).has_value();
  run.expect(cs == power, "characteristically simple iff isomorphic to S^n",
             {static_cast<Elem>(cs), static_cast<Elem>(power)});
}

const std::map<std::string_view, BraceCheck>& brace_suites() {
  static const std::map<std::string_view, BraceCheck> suites{
      {"lemmas", lemmas},       {"lemma22", lemma22},       {"ito", ito},
      {"itocor", itocor},       {"decomposable", decomposable}, {"solutions", solutions},
      {"multiperm", multiperm}, {"soc-fix", soc_fix},       {"charsimple", charsimple},
  };
  return suites;
}

void exact(Runner& run, std::span<const BraceCatalog> catalogs) {
  for (const auto& cat : catalogs) {
    const auto groups = group_catalog(cat.order);
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      run.at(cat.order, gi);
      for (const auto& ef : exact_factorizations(groups[gi].table)) {
        ++run.report().cases;
        bool built = true;
        SkewBrace a;
        try {
          a = exact_factorization_brace(ef);
        } catch (const Error& e) {
          built = false;
          run.expect(false, "x o y = b + y + c defines a skew brace", e.witness(), e.what());
        }
        if (built) {
          ++run.report().braces;
          run.expect(check_exact_factorization_props(a, ef));
        }
      }
    }
  }
}

}  // namespace

std::vector<std::string_view> suite_names() {
  std::vector<std::string_view> names;
  for (const auto& [name, fn] : brace_suites()) names.push_back(name);
  names.push_back("exact");
  return names;
}

SuiteReport run_suite(std::string_view name, std::span<const BraceCatalog> catalogs,
                      const SuiteOptions& options) {
  Runner run{std::string(name), options};
  const auto it = brace_suites().find(name);
  if (it == brace_suites().end() && name != "exact") {
    throw Error(ErrorKind::InvalidInput, "unknown suite '" + std::string(name) + "'");
  }
  try {
    if (name == "exact") {
      exact(run, catalogs);
    } else {
      for (const auto& cat : catalogs) {
        for (std::size_t i = 0; i < cat.entries.size(); ++i) {
          run.at(cat.order, i);
          ++run.report().braces;
          it->second(run, cat.entries[i].brace);
        }
      }
    }
  } catch (const Stop&) {
  }
  return std::move(run.report());
}

SuiteReport run_suite(std::string_view name, std::size_t max_order, const SuiteOptions& options,
                      const EnumerationOptions& enumeration) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw Error(ErrorKind::InvalidInput, "unknown suite '" + std::string(name) + "'");
  }
  std::vector<BraceCatalog> catalogs;
  for (std::size_t k = 1; k <= max_order; ++k) catalogs.push_back(braces_of_order(k, enumeration));
  return run_suite(name, catalogs, options);
}

}  // namespace skb
