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

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "rootless/errors.hpp"
#include "rootless/formula.hpp"
#include "rootless/local_global.hpp"

namespace rootless {

namespace {

class Namer {
 public:
  std::string fresh(const std::string& prefix) { return prefix + std::to_string(++next_); }

 private:
  uint64_t next_ = 0;
};

Formula op_formula(const OpDefinition& d, const Term& x, Namer& nm, bool subring) {
  std::vector<std::string> vars;
  std::vector<Formula> parts;
  MPoly sum;
  for (int k = 0; k < 4; ++k) {
    const AlgebraSpec& A = k < 2 ? d.first : d.second;
    std::vector<MPoly> coords;
    for (int i = 0; i < 4; ++i) {
      vars.push_back(nm.fresh("u"));
      coords.push_back(MPoly::var(vars.back()));
    }
    auto tn = symbolic_trace_norm(A, MPoly(A.a), MPoly(A.b), coords);
    if (k % 2 == 0)
      sum += tn.trd;
    else
      sum -= tn.trd;
    parts.push_back(Formula::eq(Term::from_mpoly(tn.nrd), Term::constant(1)));
  }
  parts.insert(parts.begin(), Formula::eq(x, Term::from_mpoly(sum)));
  if (subring) {
    std::vector<Formula> guards;
    for (const auto& v : vars) guards.push_back(Formula::in_subring(Term::var(v)));
    parts.insert(parts.begin(), guards.begin(), guards.end());
  }
  return Formula::exists(vars, Formula::conj(std::move(parts)));
}

Formula hker_formula(const CftConfig& cfg, const Term& b, const std::map<uint64_t, OpDefinition>& ops,
                     Namer& nm) {
  std::vector<Formula> per_field;
  for (const auto& m : cfg.fields) {
    auto fac = factor_integer(Integer(static_cast<unsigned long>(m.conductor))).factors;
    std::vector<Formula> options;
    for (uint64_t r : kernel_residues(m)) {
      std::vector<Formula> local;
      for (const auto& pp : fac) {
        Integer pe = 1;
        for (unsigned long e = 0; e < pp.exponent; ++e) pe *= pp.prime;
        Rational inv(Integer(1), pe);
        inv.canonicalize();
        Rational shift(-Integer(static_cast<unsigned long>(r)), pe);
        shift.canonicalize();
        Term arg = Term::add({Term::mul({Term::constant(inv), b}), Term::constant(shift)});
        local.push_back(op_formula(ops.at(pp.prime.get_ui()), arg, nm, true));
      }
      options.push_back(Formula::conj(std::move(local)));
    }
    per_field.push_back(Formula::disj(std::move(options)));
  }
  return Formula::conj(std::move(per_field));
}

// x in T(A/L) for A = (M, sigma, c).
Formula t_formula(const CyclicFieldSpec& m, const std::string& c, const Term& x, Namer& nm) {
  AlgebraSpec shape = AlgebraSpec::cyclic(m, 1);
  const int copies = m.l == 2 ? 2 : 1;
  std::vector<std::string> vars;
  std::vector<Formula> norms;
  MPoly trace;
  for (int k = 0; k < copies; ++k) {
    std::vector<MPoly> coords;
    for (int i = 0; i < m.l * m.l; ++i) {
      vars.push_back(nm.fresh("z"));
      coords.push_back(MPoly::var(vars.back()));
    }
    auto tn = symbolic_trace_norm(shape, MPoly::var(c), MPoly(0), coords);
    if (k == 0)
      trace += tn.trd;
    else
      trace -= tn.trd;
    norms.push_back(Formula::eq(Term::from_mpoly(tn.nrd), Term::constant(1)));
  }
  std::vector<Formula> parts{Formula::eq(x, Term::from_mpoly(trace))};
  parts.insert(parts.end(), norms.begin(), norms.end());
  return Formula::exists(vars, Formula::conj(std::move(parts)));
}

Formula psi_l(const CftConfig& cfg, const std::map<ArtinClass, uint64_t>& reps,
              const std::map<uint64_t, OpDefinition>& ops, Namer& nm) {
  const std::string k = nm.fresh("k"), h = nm.fresh("h"), w = nm.fresh("w");
  std::vector<Formula> choices;
  for (const auto& [cls, prime] : reps)
    choices.push_back(Formula::eq(
        Term::var(k), Term::mul({Term::constant(Rational(Integer(static_cast<unsigned long>(prime)))),
                                 Term::var(h)})));
  Formula class_part = Formula::exists(
      {h}, Formula::conj({Formula::in_subring(Term::var(h)), hker_formula(cfg, Term::var(h), ops, nm),
                          Formula::disj(std::move(choices))}));
  std::vector<Formula> t_parts{
      Formula::eq(Term::mul({Term::var(w), Term::var(k)}), Term::constant(1))};
  for (const auto& m : cfg.fields) {
    t_parts.push_back(t_formula(m, k, Term::var(k), nm));
    t_parts.push_back(t_formula(m, k, Term::var(w), nm));
  }
  Formula t_part = Formula::exists({w}, Formula::conj(std::move(t_parts)));
  return Formula::exists(
      {k}, Formula::conj({Formula::in_subring(Term::var(k)), std::move(class_part), std::move(t_part)}));
}

bool is_true(const Formula& f) { return f.kind == Formula::Kind::And && f.children.empty(); }
bool is_false(const Formula& f) { return f.kind == Formula::Kind::Or && f.children.empty(); }

Formula simplify_conj(std::vector<Formula> parts) {
  std::vector<Formula> kept;
  for (auto& p : parts) {
    if (is_false(p)) return Formula::disj({});
    if (!is_true(p)) kept.push_back(std::move(p));
  }
  if (kept.size() == 1) return std::move(kept.front());
  return Formula::conj(std::move(kept));
}

Formula simplify_disj(std::vector<Formula> parts) {
  std::vector<Formula> kept;
  for (auto& p : parts) {
    if (is_true(p)) return Formula::conj({});
    if (!is_false(p)) kept.push_back(std::move(p));
  }
  if (kept.size() == 1) return std::move(kept.front());
  return Formula::disj(std::move(kept));
}

// Variables of an existential block guarded by the subring predicate.
std::set<std::string> subring_vars(const Formula& ex) {
  std::set<std::string> bound(ex.vars.begin(), ex.vars.end()), out;
  const Formula& body = ex.children.front();
  auto take = [&](const Formula& g) {
    if (g.kind == Formula::Kind::InSubring && g.lhs.kind == Term::Kind::Var && bound.count(g.lhs.name))
      out.insert(g.lhs.name);
  };
  take(body);
  if (body.kind == Formula::Kind::And)
    for (const auto& c : body.children) take(c);
  return out;
}

using Tuple = std::vector<MPoly>;

std::string comp_name(const std::string& v, int k) { return v + "_" + std::to_string(k); }

// Arithmetic in Q[X]/(X^n + a_{n-1} X^{n-1} + ... + a0) on coordinate tuples.
class TupleArith {
 public:
  explicit TupleArith(std::vector<MPoly> coeffs) : n_(static_cast<int>(coeffs.size())) {
    for (int m = 0; m < n_; ++m) {
      Tuple e(static_cast<std::size_t>(n_));
      e[static_cast<std::size_t>(m)] = MPoly(1);
      reduce_.push_back(e);
    }
    for (int m = n_; m <= 2 * n_ - 2; ++m) {
      const Tuple& prev = reduce_.back();
      Tuple next(static_cast<std::size_t>(n_));
      const MPoly& carry = prev.back();
      for (int k = 0; k < n_; ++k) {
        if (k > 0) next[static_cast<std::size_t>(k)] = prev[static_cast<std::size_t>(k - 1)];
        next[static_cast<std::size_t>(k)] -= carry * coeffs[static_cast<std::size_t>(k)];
      }
      reduce_.push_back(next);
    }
  }

  int n() const { return n_; }

  Tuple scalar(const MPoly& c) const {
    Tuple t(static_cast<std::size_t>(n_));
    t[0] = c;
    return t;
  }

  static bool is_scalar(const Tuple& t) {
    return std::all_of(t.begin() + 1, t.end(), [](const MPoly& p) { return p.is_zero(); });
  }

  Tuple mul(const Tuple& u, const Tuple& v) const {
    if (is_scalar(u) || is_scalar(v)) {
      const Tuple& s = is_scalar(u) ? u : v;
      const Tuple& o = is_scalar(u) ? v : u;
      Tuple out(static_cast<std::size_t>(n_));
      if (s[0].is_zero()) return out;
      for (int k = 0; k < n_; ++k)
        if (!o[static_cast<std::size_t>(k)].is_zero())
          out[static_cast<std::size_t>(k)] = s[0] * o[static_cast<std::size_t>(k)];
      return out;
    }
    std::vector<MPoly> prod(static_cast<std::size_t>(2 * n_ - 1));
    for (int i = 0; i < n_; ++i) {
      if (u[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        if (v[static_cast<std::size_t>(j)].is_zero()) continue;
        prod[static_cast<std::size_t>(i + j)] += u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
      }
    }
    Tuple out(static_cast<std::size_t>(n_));
    for (int m = 0; m <= 2 * n_ - 2; ++m) {
      if (prod[static_cast<std::size_t>(m)].is_zero()) continue;
      for (int k = 0; k < n_; ++k) {
        const MPoly& r = reduce_[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
        if (!r.is_zero()) out[static_cast<std::size_t>(k)] += prod[static_cast<std::size_t>(m)] * r;
      }
    }
    return out;
  }

  Tuple eval(const Term& t, const std::map<std::string, Tuple>& env) const {
    switch (t.kind) {
      case Term::Kind::Const:
        return scalar(MPoly(t.value));
      case Term::Kind::Var: {
        auto it = env.find(t.name);
        if (it != env.end()) return it->second;
        Tuple out;
        for (int k = 0; k < n_; ++k) out.push_back(MPoly::var(comp_name(t.name, k)));
        return out;
      }
      case Term::Kind::Add: {
        Tuple out(static_cast<std::size_t>(n_));
        for (const auto& a : t.args) {
          Tuple x = eval(a, env);
          for (int k = 0; k < n_; ++k) out[static_cast<std::size_t>(k)] += x[static_cast<std::size_t>(k)];
        }
        return out;
      }
      case Term::Kind::Mul: {
        Tuple out = scalar(MPoly(1));
        for (const auto& a : t.args) out = mul(out, eval(a, env));
        return out;
      }
    }
    return scalar(MPoly());
  }

  Tuple difference(const Term& lhs, const Term& rhs, const std::map<std::string, Tuple>& env) const {
    Tuple d = eval(lhs, env);
    Tuple r = eval(rhs, env);
    for (int k = 0; k < n_; ++k) d[static_cast<std::size_t>(k)] -= r[static_cast<std::size_t>(k)];
    return d;
  }

 private:
  int n_;
  std::vector<Tuple> reduce_;
};

// Binds the variables of an existential block: guarded variables range over
// the subring and read as scalars, the rest as n coordinates.
std::vector<std::pair<std::string, std::optional<Tuple>>> bind_block(const Formula& ex, int n,
                                                              std::map<std::string, Tuple>& env,
                                                              std::vector<std::string>* new_vars,
                                                              std::set<std::string>* scalars) {
  auto ks = subring_vars(ex);
  std::vector<std::pair<std::string, std::optional<Tuple>>> saved;
  for (const auto& v : ex.vars) {
    auto it = env.find(v);
    saved.emplace_back(v, it == env.end() ? std::nullopt : std::optional<Tuple>(it->second));
    Tuple t(static_cast<std::size_t>(n));
    if (ks.count(v)) {
      t[0] = MPoly::var(v);
      if (new_vars) new_vars->push_back(v);
      if (scalars) scalars->insert(v);
    } else {
      for (int k = 0; k < n; ++k) {
        t[static_cast<std::size_t>(k)] = MPoly::var(comp_name(v, k));
        if (new_vars) new_vars->push_back(comp_name(v, k));
      }
      if (scalars) scalars->erase(v);
    }
    env[v] = std::move(t);
  }
  return saved;
}

void unbind_block(std::vector<std::pair<std::string, std::optional<Tuple>>>& saved,
            std::map<std::string, Tuple>& env) {
  for (auto it = saved.rbegin(); it != saved.rend(); ++it) {
    if (it->second)
      env[it->first] = std::move(*it->second);
    else
      env.erase(it->first);
  }
}

Formula interpret(const Formula& f, const TupleArith& ar, std::map<std::string, Tuple>& env) {
  switch (f.kind) {
    case Formula::Kind::Eq: {
      Tuple d = ar.difference(f.lhs, f.rhs, env);
      std::vector<Formula> eqs;
      for (const auto& c : d) {
        if (c.is_zero()) continue;
        if (c.is_constant()) return Formula::disj({});
        eqs.push_back(Formula::eq(Term::from_mpoly(c), Term::constant(0)));
      }
      return simplify_conj(std::move(eqs));
    }
    case Formula::Kind::InSubring: {
      Tuple d = ar.eval(f.lhs, env);
      std::vector<Formula> eqs;
      for (std::size_t k = 1; k < d.size(); ++k) {
        if (d[k].is_zero()) continue;
        if (d[k].is_constant()) return Formula::disj({});
        eqs.push_back(Formula::eq(Term::from_mpoly(d[k]), Term::constant(0)));
      }
      return simplify_conj(std::move(eqs));
    }
    case Formula::Kind::And: {
      std::vector<Formula> parts;
      for (const auto& c : f.children) parts.push_back(interpret(c, ar, env));
      return simplify_conj(std::move(parts));
    }
    case Formula::Kind::Or: {
      std::vector<Formula> parts;
      for (const auto& c : f.children) parts.push_back(interpret(c, ar, env));
      return simplify_disj(std::move(parts));
    }
    case Formula::Kind::Exists: {
      std::vector<std::string> vars;
      auto saved = bind_block(f, ar.n(), env, &vars, nullptr);
      Formula body = interpret(f.children.front(), ar, env);
      unbind_block(saved, env);
      if (is_true(body) || is_false(body)) return body;
      auto used = free_variables(body);
      std::vector<std::string> kept;
      for (const auto& v : vars)
        if (used.count(v)) kept.push_back(v);
      if (kept.empty()) return body;
      return Formula::exists(std::move(kept), std::move(body));
    }
  }
  return Formula::conj({});
}

Formula rename_free(const Formula& f, const std::map<std::string, std::string>& names) {
  std::function<Term(const Term&, const std::set<std::string>&)> rt = [&](const Term& t,
                                                                          const std::set<std::string>& bound) {
    if (t.kind == Term::Kind::Var) {
      auto it = names.find(t.name);
      if (it != names.end() && !bound.count(t.name)) return Term::var(it->second);
      return t;
    }
    Term out = t;
    for (auto& a : out.args) a = rt(a, bound);
    return out;
  };
  std::function<Formula(const Formula&, std::set<std::string>)> rf = [&](const Formula& g,
                                                                          std::set<std::string> bound) {
    Formula out = g;
    if (g.kind == Formula::Kind::Eq || g.kind == Formula::Kind::InSubring) {
      out.lhs = rt(g.lhs, bound);
      out.rhs = rt(g.rhs, bound);
      return out;
    }
    if (g.kind == Formula::Kind::Exists) bound.insert(g.vars.begin(), g.vars.end());
    for (auto& c : out.children) c = rf(c, bound);
    return out;
  };
  return rf(f, {});
}

std::vector<MPoly> symbolic_coeffs(const std::vector<std::string>& names) {
  std::vector<MPoly> out;
  for (const auto& n : names) out.push_back(MPoly::var(n));
  return out;
}

}  // namespace

OpDefinition build_Op_definition(uint64_t p, long search_bound) {
  if (!is_prime(p)) throw InvalidInput("O_p definition needs a prime, got " + std::to_string(p));
  struct Candidate {
    AlgebraSpec spec;
    DeltaSet delta;
  };
  std::vector<Candidate> seen;
  const Place at_p = Place::finite(p);
  for (long m = 1; m <= search_bound; ++m) {
    for (long a = -m; a <= m; ++a) {
      for (long b = -m; b <= m; ++b) {
        if (a == 0 || b == 0 || std::max(std::labs(a), std::labs(b)) != m) continue;
        auto spec = AlgebraSpec::quaternion(a, b);
        auto delta = ramified_places(spec);
        if (!delta.contains(at_p) || delta.contains(Place::infinite())) continue;
        for (const auto& c : seen) {
          bool only_p = true;
          for (const auto& v : delta.places)
            if (!(v == at_p) && c.delta.contains(v)) only_p = false;
          if (!only_p) continue;
          OpDefinition d;
          d.p = p;
          d.first = c.spec;
          d.second = spec;
          d.first_delta = c.delta;
          d.second_delta = delta;
          Namer nm;
          d.formula = op_formula(d, Term::var("x"), nm, false);
          return d;
        }
        seen.push_back({spec, delta});
      }
    }
  }
  throw SearchExhausted("no pair of quaternion algebras meeting only at " + std::to_string(p) +
                        " with |a|, |b| <= " + std::to_string(search_bound));
}

PsiFormula build_psi(int n) {
  if (n < 2) throw UnsupportedConfig("psi_n needs n >= 2");
  std::vector<CftConfig> configs;
  for (const auto& pp : factor_integer(Integer(n)).factors)
    configs.push_back(default_config(static_cast<int>(pp.prime.get_si()), n));
  return build_psi(n, configs);
}

PsiFormula build_psi(int n, const std::vector<CftConfig>& configs) {
  if (configs.empty()) throw InvalidInput("psi_n needs at least one configuration");
  PsiFormula out;
  out.n = n;
  out.configs = configs;
  for (const auto& cfg : configs) {
    if (cfg.n != n || n % cfg.l != 0)
      throw InvalidInput("configuration " + cfg.to_string() + " does not fit n = " + std::to_string(n));
    validate(cfg);
    out.representatives.push_back(class_representatives(cfg));
    for (uint64_t p : cfg.modulus_primes())
      if (!out.local_rings.count(p)) out.local_rings.emplace(p, build_Op_definition(p));
  }
  Namer nm;
  std::vector<Formula> branches;
  for (std::size_t i = 0; i < configs.size(); ++i)
    branches.push_back(psi_l(configs[i], out.representatives[i], out.local_rings, nm));
  out.formula = branches.size() == 1 ? std::move(branches.front()) : Formula::disj(std::move(branches));
  out.stats = stats(out.formula);
  return out;
}

std::vector<std::string> phi_parameters(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("a" + std::to_string(i));
  return out;
}

Formula interpret_in_tuples(const Formula& f, const std::vector<std::string>& coeffs) {
  if (coeffs.empty()) throw InvalidInput("tuple reading needs at least one coefficient");
  TupleArith ar(symbolic_coeffs(coeffs));
  std::map<std::string, Tuple> env;
  return interpret(f, ar, env);
}

PhiFormula build_phi(int n) {
  if (n < 2 || n > 4) throw UnsupportedConfig("phi_n is built for n = 2, 3, 4");
  PhiFormula out;
  out.n = n;
  auto psi = build_psi(n);
  out.formula = interpret_in_tuples(psi.formula, phi_parameters(n));
  if (n == 4) {
    Formula phi2 = build_phi(2).formula;
    auto v = [](const char* s) { return Term::var(s); };
    auto prod = [&](const char* x, const char* y) { return Term::mul({v(x), v(y)}); };
    Formula split = Formula::exists(
        {"b0", "b1", "c0", "c1"},
        Formula::conj({Formula::eq(v("a3"), Term::add({v("b1"), v("c1")})),
                       Formula::eq(v("a2"), Term::add({v("b0"), v("c0"), prod("b1", "c1")})),
                       Formula::eq(v("a1"), Term::add({prod("b1", "c0"), prod("b0", "c1")})),
                       Formula::eq(v("a0"), prod("b0", "c0")),
                       rename_free(phi2, {{"a0", "b0"}, {"a1", "b1"}}),
                       rename_free(phi2, {{"a0", "c0"}, {"a1", "c1"}})}));
    out.formula = Formula::disj({std::move(out.formula), std::move(split)});
  }
  out.stats = stats(out.formula);
  return out;
}

HomomorphismReport homomorphism_check(const PsiFormula& psi,
                                      const std::vector<std::pair<PolyQ, Rational>>& rooted, int samples,
                                      uint64_t seed, uint64_t probe_budget) {
  const int n = psi.n;
  for (const auto& [f, r] : rooted) {
    if (f.degree() != n || !f.is_monic())
      throw InvalidInput("homomorphism check needs monic polynomials of degree " + std::to_string(n));
    if (f.eval(r) != 0) throw InvalidInput(r.get_str() + " is not a root of " + f.to_string());
  }

  struct Atom {
    Term lhs, rhs;
    std::set<std::string> scalars;
    Tuple comps;
  };
  const auto params = phi_parameters(n);
  TupleArith ar(symbolic_coeffs(params));
  std::vector<Atom> atoms;
  std::map<std::string, Tuple> env;
  std::set<std::string> scalars;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    switch (g.kind) {
      case Formula::Kind::Eq:
        atoms.push_back({g.lhs, g.rhs, scalars, ar.difference(g.lhs, g.rhs, env)});
        return;
      case Formula::Kind::InSubring:
        return;
      case Formula::Kind::And:
      case Formula::Kind::Or:
        for (const auto& c : g.children) walk(c);
        return;
      case Formula::Kind::Exists: {
        auto before = scalars;
        auto saved = bind_block(g, n, env, nullptr, &scalars);
        walk(g.children.front());
        unbind_block(saved, env);
        scalars = std::move(before);
        return;
      }
    }
  };
  walk(psi.formula);

  HomomorphismReport rep;
  std::mt19937_64 rng(seed);
  auto random_rational = [&rng]() {
    Rational q(Integer(static_cast<long>(rng() % 11) - 5), Integer(static_cast<long>(rng() % 3) + 1));
    q.canonicalize();
    return q;
  };
  for (const auto& [f, root] : rooted) {
    std::vector<Rational> powers{Rational(1)};
    for (int k = 1; k < n; ++k) powers.push_back(powers.back() * root);
    for (const auto& atom : atoms) {
      std::set<std::string> vars;
      for (const Term* t : {&atom.lhs, &atom.rhs}) {
        std::function<void(const Term&)> tv = [&](const Term& x) {
          if (x.kind == Term::Kind::Var) vars.insert(x.name);
          for (const auto& a : x.args) tv(a);
        };
        tv(*t);
      }
      MPoly direct = to_mpoly(atom.lhs) - to_mpoly(atom.rhs);
      for (int s = 0; s < samples; ++s) {
        std::map<std::string, Rational> tuple_env, image_env;
        for (int i = 0; i < n; ++i) tuple_env[params[static_cast<std::size_t>(i)]] = f.coeff(i);
        for (const auto& v : vars) {
          if (atom.scalars.count(v)) {
            Rational x = random_rational();
            tuple_env[v] = x;
            image_env[v] = x;
          } else {
            Rational img = 0;
            for (int k = 0; k < n; ++k) {
              Rational x = random_rational();
              tuple_env[comp_name(v, k)] = x;
              img += x * powers[static_cast<std::size_t>(k)];
            }
            image_env[v] = img;
          }
        }
        Rational mapped = 0;
        for (int k = 0; k < n; ++k)
          mapped += atom.comps[static_cast<std::size_t>(k)].eval(tuple_env) * powers[static_cast<std::size_t>(k)];
        Rational expected = direct.eval(image_env);
        ++rep.equations_checked;
        if (mapped != expected && rep.ok) {
          rep.ok = false;
          rep.message = "equation " + serialize(Formula::eq(atom.lhs, atom.rhs)).substr(0, 120) +
                        " fails to map under X -> " + root.get_str() + " for " + f.to_string();
        }
      }
    }
  }

  if (probe_budget > 0) {
    for (const auto& [f, root] : rooted) {
      std::vector<MPoly> coeffs;
      for (int i = 0; i < n; ++i) coeffs.push_back(MPoly(f.coeff(i)));
      TupleArith at_f(coeffs);
      std::map<std::string, Tuple> fenv;
      Formula reading = interpret(psi.formula, at_f, fenv);
      auto res = bounded_eval(reading, {}, 1, probe_budget);
      if (res.sat) {
        ++rep.probe_sat;
        if (rep.ok) rep.message = "bounded witness for the tuple reading at " + f.to_string();
        rep.ok = false;
      }
    }
  }
  return rep;
}

}  // namespace rootless
