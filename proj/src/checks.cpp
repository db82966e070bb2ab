/*
   Copyright 2026 The rootless Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "rootless/checks.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "rootless/criterion.hpp"
#include "rootless/errors.hpp"
#include "rootless/ff.hpp"
#include "rootless/formula.hpp"
#include "rootless/local_global.hpp"

namespace rootless {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ",") + s;
  return out.empty() ? "none" : out;
}

std::string num(uint64_t x) { return std::to_string(x); }

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string fixed(double x) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(4);
  os << x;
  return os.str();
}

void scan_u(Report& r, int l, uint64_t qmax, bool corrupt) {
  const std::string key = "U" + std::to_string(l);
  std::vector<std::string> bad;
  uint64_t fields = 0;
  for (uint64_t qq : prime_powers(2, qmax)) {
    TraceSet u = compute_U(FqField::of_order(qq), l);
    if (corrupt && fields == 0) u.elements.pop_back();
    ++fields;
    if (!u.is_full()) bad.push_back(num(qq));
  }
  r.verdict(key + ".fields", num(fields));
  if (bad.empty())
    r.verdict(key + ".full", "all");
  else
    r.violation(key + ".not_full", join(bad));
}

void scan_difference(Report& r, uint64_t lo, uint64_t hi, bool augment, bool corrupt) {
  const std::string key = augment ? "U2_augmented_minus_U2" : "U2_minus_U2";
  std::vector<std::string> bad;
  uint64_t fields = 0;
  for (uint64_t qq : prime_powers(lo, hi)) {
    TraceSet u = compute_U(FqField::of_order(qq), 2);
    if (corrupt && fields == 0) u.elements.resize(1);
    ++fields;
    if (!check_difference_property(u, augment).holds) bad.push_back(num(qq));
  }
  r.verdict(key + ".range", num(lo) + ".." + num(hi));
  r.verdict(key + ".fields", num(fields));
  if (bad.empty())
    r.verdict(key + ".covers", "all");
  else
    r.violation(key + ".not_covering", join(bad));
}

void scan_prescribed(Report& r, int n, uint64_t lo, uint64_t hi, bool minus_one_only, bool corrupt) {
  const std::string key = "irreducible_n" + std::to_string(n) + (minus_one_only ? "_a0_minus_1" : "");
  std::vector<std::string> bad;
  uint64_t pairs = 0;
  for (uint64_t qq : prime_powers(lo, hi)) {
    TableField tf(FqField::of_order(qq));
    std::vector<uint32_t> a0s;
    if (minus_one_only)
      a0s.push_back(tf.neg(1));
    else
      for (uint32_t a0 = 1; a0 < qq; ++a0) a0s.push_back(a0);
    for (uint32_t a0 : a0s) {
      for (uint32_t top = 0; top < qq; ++top) {
        ++pairs;
        auto f = find_irreducible_prescribed(tf, n, a0, top);
        if (corrupt && pairs == 1) f.reset();
        if (!f) bad.push_back("q" + num(qq) + ":a0=" + num(a0) + ":top=" + num(top));
      }
    }
  }
  r.verdict(key + ".range", num(lo) + ".." + num(hi));
  r.verdict(key + ".pairs", num(pairs));
  if (bad.empty())
    r.verdict(key + ".missing", "none");
  else
    r.violation(key + ".missing", join(bad));
}

std::vector<Place> places_of(long a, long b) {
  std::set<uint64_t> primes{2};
  for (long x : {a, b})
    for (const auto& pp : factor_integer(Integer(std::labs(x))).factors) primes.insert(pp.prime.get_ui());
  std::vector<Place> out;
  for (uint64_t p : primes) out.push_back(Place::finite(p));
  out.push_back(Place::infinite());
  return out;
}

std::vector<Rational> random_coords(std::mt19937_64& rng, int dim) {
  std::vector<Rational> c;
  for (int i = 0; i < dim; ++i) c.push_back(q(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 3) + 1));
  return c;
}

// Cayley-Hamilton for the reduced characteristic polynomial, degrees 2 and 3.
bool cayley_hamilton(const AlgebraElement& x) {
  const auto& alg = *x.algebra;
  auto tn = reduced_trace_norm(x);
  auto x2 = mul(x, x);
  if (alg.degree() == 2) return add(sub(x2, scale(x, tn.trd)), alg.scalar(tn.nrd)) == alg.scalar(0);
  Rational c2 = (tn.trd * tn.trd - reduced_trace_norm(x2).trd) / 2;
  auto lhs = add(sub(add(mul(x2, x), scale(x, c2)), scale(x2, tn.trd)), alg.scalar(-tn.nrd));
  return lhs == alg.scalar(0);
}

PolyQ from_longs(const std::vector<long>& c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return PolyQ(v);
}

}  // namespace

Report verify_ff(int lmax, uint64_t qmax, const CheckOptions& opt) {
  if (lmax < 2 || qmax < 2) throw InvalidInput("verify-ff needs lmax >= 2 and qmax >= 2");
  Stopwatch sw;
  Report r;
  r.command = "verify-ff";
  r.param("lmax", std::to_string(lmax));
  r.param("qmax", num(qmax));
  r.param("negative_control", opt.negative_control ? "true" : "false");
  for (uint64_t l : primes_up_to(static_cast<uint64_t>(lmax)))
    if (l > 2) scan_u(r, static_cast<int>(l), qmax, opt.negative_control);
  if (qmax > 11) scan_difference(r, 12, qmax, false, opt.negative_control);
  scan_difference(r, 2, std::min<uint64_t>(qmax, 11), true, opt.negative_control);
  scan_prescribed(r, 6, 2, std::min<uint64_t>(qmax, 9), false, false);
  if (qmax > 9) scan_prescribed(r, 5, 10, std::min<uint64_t>(qmax, 25), false, false);
  scan_prescribed(r, 5, 2, std::min<uint64_t>(qmax, 9), true, false);
  r.timing("total", sw.seconds());
  return r;
}

Report check_trace_sets_full(const CheckOptions& opt) {
  Stopwatch sw;
  Report r;
  r.command = "trace-sets-full";
  scan_u(r, 3, 121, opt.negative_control);
  scan_u(r, 5, 49, opt.negative_control);
  r.timing("total", sw.seconds());
  return r;
}

Report check_difference_sets(const CheckOptions& opt) {
  Stopwatch sw;
  Report r;
  r.command = "difference-sets";
  scan_difference(r, 12, 169, false, opt.negative_control);
  scan_difference(r, 2, 11, true, opt.negative_control);
  r.timing("total", sw.seconds());
  return r;
}

Report check_prescribed_irreducibles(const CheckOptions& opt) {
  Stopwatch sw;
  Report r;
  r.command = "prescribed-irreducibles";
  scan_prescribed(r, 6, 2, 9, false, opt.negative_control);
  scan_prescribed(r, 5, 10, 25, false, opt.negative_control);
  scan_prescribed(r, 5, 2, 9, true, opt.negative_control);
  r.timing("total", sw.seconds());
  return r;
}

Report check_hilbert_reciprocity(long bound, const CheckOptions& opt) {
  Stopwatch sw;
  Report r;
  r.command = "hilbert-reciprocity";
  r.param("bound", std::to_string(bound));
  uint64_t pairs = 0, failures = 0;
  std::vector<std::string> bad;
  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      if (a == 0 || b == 0) continue;
      ++pairs;
      int prod = 1;
      for (const auto& v : places_of(a, b)) {
        if (opt.negative_control && v.is_infinite()) continue;
        prod *= hilbert_symbol(a, b, v);
      }
      if (prod == 1) continue;
      ++failures;
      if (bad.size() < 20) bad.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
  r.verdict("pairs", num(pairs));
  r.verdict("failures", num(failures));
  if (bad.empty())
    r.verdict("violations", "none");
  else
    r.violation("violations", join(bad));
  r.timing("total", sw.seconds());
  return r;
}

Report check_norm_trace(int pairs, const CheckOptions& opt) {
  Stopwatch sw;
  Report r;
  r.command = "norm-trace";
  r.param("pairs", std::to_string(pairs));
  r.param("seed", num(opt.seed));
  std::mt19937_64 rng(opt.seed);
  std::vector<AlgebraSpec> specs{AlgebraSpec::quaternion(-1, -1), AlgebraSpec::quaternion(2, 5),
                                 AlgebraSpec::quaternion(-3, q(7, 2)),
                                 AlgebraSpec::cyclic(quadratic_field(5), 3),
                                 AlgebraSpec::cyclic(cyclic_cubic(7), 2),
                                 AlgebraSpec::cyclic(cyclic_cubic(9), q(3, 2))};
  std::vector<std::string> bad;
  for (const auto& spec : specs) {
    auto alg = Algebra::create(spec);
    for (int t = 0; t < pairs; ++t) {
      auto x = alg->element(random_coords(rng, alg->dimension()));
      auto y = alg->element(random_coords(rng, alg->dimension()));
      Rational c = q(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
      auto tx = reduced_trace_norm(x), ty = reduced_trace_norm(y);
      Rational nxy = reduced_trace_norm(mul(x, y)).nrd;
      if (opt.negative_control) nxy += 1;
      bool ok = nxy == tx.nrd * ty.nrd && reduced_trace_norm(add(x, y)).trd == tx.trd + ty.trd &&
                reduced_trace_norm(scale(x, c)).trd == c * tx.trd && cayley_hamilton(x);
      if (!ok) {
        bad.push_back(spec.to_string());
        break;
      }
    }
  }
  r.verdict("algebras", num(specs.size()));
  // Degree two: the cyclic algebra (Q(sqrt d), sigma, a) is the quaternion algebra (d, a).
  uint64_t agreements = 0;
  for (long d : {2L, 5L, -1L, 13L}) {
    for (const Rational& a : {q(3), q(-7), q(2, 5)}) {
      auto cyc = Algebra::create(AlgebraSpec::cyclic(quadratic_field(d), a));
      auto quat = Algebra::create(AlgebraSpec::quaternion(d, a));
      for (int t = 0; t < 20; ++t) {
        auto coords = random_coords(rng, 4);
        auto tc = reduced_trace_norm(cyc->element(coords));
        auto tq = reduced_trace_norm(quat->element(coords));
        auto tm = reduced_trace_norm_matrix(quat->element(coords));
        ++agreements;
        if (!(tc.trd == tq.trd && tc.nrd == tq.nrd && tm.trd == tq.trd && tm.nrd == tq.nrd)) {
          bad.push_back("degree-two d=" + std::to_string(d) + " a=" + a.get_str());
          break;
        }
      }
    }
  }
  r.verdict("degree_two_comparisons", num(agreements));
  if (bad.empty())
    r.verdict("failures", "none");
  else
    r.violation("failures", join(bad));
  r.timing("total", sw.seconds());
  return r;
}

Report check_local_global_soundness(long bound, long height, const CheckOptions& opt) {
  Stopwatch sw;
  Report r;
  r.command = "local-global-soundness";
  r.param("bound", std::to_string(bound));
  r.param("height", std::to_string(height));
  const std::vector<Rational> targets{q(0),    q(1),    q(3),    q(1, 2), q(3, 2),
                                      q(1, 3), q(2, 3), q(1, 5), q(3, 7), q(5, 6)};
  uint64_t algebras = 0, searches = 0, hits = 0;
  std::vector<std::string> bad;
  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      if (a == 0 || b == 0) continue;
      auto spec = AlgebraSpec::quaternion(a, b);
      auto delta = ramified_places(spec);
      ++algebras;
      for (const auto& t : targets) {
        ++searches;
        auto x = s_witness_search(spec, t, height);
        if (!x) continue;
        ++hits;
        auto tn = reduced_trace_norm(*x);
        bool ok = tn.trd == t && tn.nrd == 1;
        for (const auto& v : delta.places) {
          if (v.is_infinite()) continue;
          auto val = padic_valuation(tn.trd, v.prime());
          bool integral = !val || *val >= 0;
          if (opt.negative_control) integral = !integral || !val;
          if (!integral) ok = false;
        }
        if (!ok && bad.size() < 20) bad.push_back(spec.to_string() + ":" + t.get_str());
      }
    }
  }
  r.verdict("algebras", num(algebras));
  r.verdict("searches", num(searches));
  r.verdict("hits", num(hits));
  if (hits == 0) r.violation("coverage", "no witnesses found");
  if (bad.empty())
    r.verdict("violations", "none");
  else
    r.violation("violations", join(bad));
  r.timing("total", sw.seconds());
  return r;
}

Report check_criterion_separation(uint64_t candidate_bound, const CheckOptions& opt) {
  Stopwatch sw;
  Report r;
  r.command = "criterion-separation";
  r.param("candidate_bound", num(candidate_bound));
  DaggerBounds bounds;
  bounds.candidate_bound = candidate_bound;
  for (const auto& [l, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {2, 4}}) {
    const std::string key = "Q.n" + std::to_string(n);
    auto cfg = default_config(l, n);
    auto v = dagger_check(ExtensionSpec::rational(), l, cfg, bounds);
    uint64_t confirmed = 0;
    for (const auto& ref : v.refutations) {
      const auto& m = cfg.fields[static_cast<std::size_t>(ref.field_index)];
      auto val = padic_valuation(ref.a, ref.p);
      bool ok = val && *val % l != 0;
      if (l == 2)
        ok = ok && hilbert_symbol(-m.defining_poly.coeff(0), ref.a, Place::finite(ref.p)) == -1;
      else
        ok = ok && factor_mod_p(m.defining_poly, ref.p).cycle_type.degrees == std::vector<int>{3};
      confirmed += ok;
    }
    r.verdict(key + ".candidates", num(v.candidates));
    r.verdict(key + ".refuted", num(confirmed));
    if (v.holds || !v.unrefuted.empty() || confirmed != v.candidates || v.candidates == 0)
      r.violation(key + ".holds", v.holds ? "true" : "false");
    else
      r.verdict(key + ".holds", "false");
  }
  struct Case {
    const char* poly;
    int n;
  };
  for (const auto& c : {Case{"X^2-2", 2}, Case{"X^2-3", 2}, Case{"X^2-7", 2}, Case{"X^2+1", 2}, Case{"X^2+2", 2},
                        Case{"X^3-2", 3}}) {
    const std::string key = std::string("L[") + c.poly + "]";
    auto L = ExtensionSpec::from_poly(PolyQ::parse(c.poly));
    auto audited = opt.negative_control ? ExtensionSpec::rational() : L;
    auto cfg = default_config(c.n, c.n);
    auto v = dagger_check(L, c.n, cfg);
    std::vector<std::string> trace;
    bool ok = v.holds && v.witness && audit_witness(audited, cfg, *v.witness, &trace) &&
              audit_witness(audited, cfg, 1 / *v.witness) && psi_semantic(L, c.n);
    if (v.witness) r.verdict(key + ".witness", v.witness->get_str());
    if (ok)
      r.verdict(key + ".holds", "true");
    else
      r.violation(key + ".holds", "false");
    std::string text;
    for (const auto& line : trace) text += line + "\n";
    r.trace(key, text);
  }
  r.timing("total", sw.seconds());
  return r;
}

Report check_oracle_equivalence(int per_degree, const CheckOptions& opt) {
  Stopwatch sw;
  Report r;
  r.command = "oracle-equivalence";
  r.param("per_degree", std::to_string(per_degree));
  r.param("seed", num(opt.seed));
  std::mt19937_64 rng(opt.seed);
  std::vector<std::string> bad;
  auto compare = [&](const PolyQ& f) {
    bool semantic = no_root_semantic(f);
    bool oracle = rational_roots(f).empty();
    if (opt.negative_control) oracle = !oracle;
    if (semantic != oracle && bad.size() < 20) bad.push_back(f.to_string());
    return semantic;
  };
  for (int deg = 2; deg <= 4; ++deg) {
    uint64_t rootless_count = 0;
    for (int t = 0; t < per_degree; ++t) {
      std::vector<long> c;
      for (int i = 0; i < deg; ++i) c.push_back(static_cast<long>(rng() % 21) - 10);
      c.push_back(1);
      rootless_count += compare(from_longs(c));
    }
    r.verdict("degree" + std::to_string(deg) + ".checked", std::to_string(per_degree));
    r.verdict("degree" + std::to_string(deg) + ".rootless", num(rootless_count));
  }
  const std::vector<std::vector<long>> quadratics{{1, 0, 1},  {2, 0, 1},  {-2, 0, 1}, {1, 1, 1},
                                                  {-3, 0, 1}, {-1, 1, 1}, {3, 0, 1},  {2, -1, 1}};
  uint64_t crafted = 0;
  for (std::size_t i = 0; i < quadratics.size() && crafted < 20; ++i)
    for (std::size_t j = i; j < quadratics.size() && crafted < 20; ++j) {
      ++crafted;
      compare(from_longs(quadratics[i]) * from_longs(quadratics[j]));
    }
  r.verdict("crafted_quartics", num(crafted));
  if (bad.empty())
    r.verdict("disagreements", "none");
  else
    r.violation("disagreements", join(bad));
  r.timing("total", sw.seconds());
  return r;
}

Report check_formula_artifacts(int rooted_per_degree, uint64_t probe_budget, const CheckOptions& opt) {
  Stopwatch sw;
  Report r;
  r.command = "formula-artifacts";
  r.param("rooted_per_degree", std::to_string(rooted_per_degree));
  r.param("probe_budget", num(probe_budget));
  r.param("seed", num(opt.seed));
  std::mt19937_64 rng(opt.seed);
  for (int n = 2; n <= 4; ++n) {
    const std::string key = "phi" + std::to_string(n);
    auto phi = build_phi(n);
    auto params = phi_parameters(n);
    auto syntax = check_positive_existential(phi.formula, {params.begin(), params.end()}, false);
    if (syntax.ok)
      r.verdict(key + ".syntax", "ok");
    else
      r.violation(key + ".syntax", syntax.message);
    std::string text = serialize(phi.formula);
    if (opt.negative_control) text.pop_back();
    bool round_trip = false;
    try {
      round_trip = parse_formula(text) == phi.formula;
    } catch (const ParseError&) {
    }
    if (round_trip)
      r.verdict(key + ".round_trip", "ok");
    else
      r.violation(key + ".round_trip", "failed");
    r.verdict(key + ".quantifiers", num(phi.stats.quantifiers));
    r.verdict(key + ".disjuncts", num(phi.stats.disjuncts));
    r.verdict(key + ".equations", num(phi.stats.equations));
    r.verdict(key + ".parameters", num(phi.stats.parameters));
    r.verdict(key + ".size", num(phi.stats.size));

    std::vector<std::pair<PolyQ, Rational>> rooted;
    for (int t = 0; t < rooted_per_degree; ++t) {
      Rational root = q(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 3) + 1);
      std::vector<Rational> g;
      for (int i = 0; i < n - 1; ++i) g.push_back(q(static_cast<long>(rng() % 11) - 5));
      g.push_back(1);
      rooted.emplace_back(PolyQ({-root, Rational(1)}) * PolyQ(g), root);
    }
    auto hom = homomorphism_check(build_psi(n), rooted, 1, opt.seed, probe_budget);
    r.verdict(key + ".rooted", num(rooted.size()));
    r.verdict(key + ".equations_checked", num(hom.equations_checked));
    r.verdict(key + ".probe_witnesses", num(hom.probe_sat));
    if (hom.ok)
      r.verdict(key + ".homomorphism", "ok");
    else
      r.violation(key + ".homomorphism", hom.message);
  }
  r.timing("total", sw.seconds());
  return r;
}

Report check_chebotarev(uint64_t bound, const CheckOptions& opt) {
  Stopwatch sw;
  Report r;
  r.command = "chebotarev";
  r.param("bound", num(bound));
  r.param("relative_tolerance", "0.05");
  std::set<std::string> seen;
  const auto primes = primes_up_to(bound);
  for (const auto& cfg : {default_config(2, 2), default_config(3, 3), default_config(2, 4)}) {
    for (const auto& m : cfg.fields) {
      const std::string name = m.defining_poly.to_string();
      if (!seen.insert(name).second) continue;
      uint64_t total = 0, kernel = 0;
      for (uint64_t p : primes) {
        if (m.conductor % p == 0) continue;
        ++total;
        kernel += m.chi(Integer(static_cast<unsigned long>(p))) == 0;
      }
      double density = static_cast<double>(kernel) / static_cast<double>(total);
      double expected = 1.0 / (opt.negative_control ? m.l + 1 : m.l);
      const std::string key = "field[" + name + "]";
      r.verdict(key + ".primes", num(total));
      if (std::abs(density - expected) <= 0.05 * expected)
        r.verdict(key + ".kernel_density", fixed(density));
      else
        r.violation(key + ".kernel_density", fixed(density));
    }
  }
  r.timing("total", sw.seconds());
  return r;
}

const std::vector<NamedCheck>& acceptance_checks() {
  static const std::vector<NamedCheck> checks{
      {"trace-sets-full", [](const CheckOptions& o) { return check_trace_sets_full(o); }},
      {"difference-sets", [](const CheckOptions& o) { return check_difference_sets(o); }},
      {"prescribed-irreducibles", [](const CheckOptions& o) { return check_prescribed_irreducibles(o); }},
      {"hilbert-reciprocity", [](const CheckOptions& o) { return check_hilbert_reciprocity(50, o); }},
      {"norm-trace", [](const CheckOptions& o) { return check_norm_trace(200, o); }},
      {"local-global-soundness", [](const CheckOptions& o) { return check_local_global_soundness(10, 3, o); }},
      {"criterion-separation", [](const CheckOptions& o) { return check_criterion_separation(200, o); }},
      {"oracle-equivalence", [](const CheckOptions& o) { return check_oracle_equivalence(200, o); }},
      {"formula-artifacts", [](const CheckOptions& o) { return check_formula_artifacts(50, 20, o); }},
      {"chebotarev", [](const CheckOptions& o) { return check_chebotarev(10000, o); }},
  };
  return checks;
}

}  // namespace rootless
