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

#include "rootless/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "rootless/errors.hpp"

namespace rootless {

Term Term::var(std::string name) {
  Term t;
  t.kind = Kind::Var;
  t.name = std::move(name);
  return t;
}

Term Term::constant(const Rational& c) {
  Term t;
  t.kind = Kind::Const;
  t.value = c;
  return t;
}

Term Term::add(std::vector<Term> args) {
  if (args.size() == 1) return std::move(args[0]);
  if (args.empty()) return constant(0);
  Term t;
  t.kind = Kind::Add;
  t.args = std::move(args);
  return t;
}

Term Term::mul(std::vector<Term> args) {
  if (args.size() == 1) return std::move(args[0]);
  if (args.empty()) return constant(1);
  Term t;
  t.kind = Kind::Mul;
  t.args = std::move(args);
  return t;
}

Term Term::from_mpoly(const MPoly& p) {
  std::vector<Term> sum;
  for (const auto& [mono, c] : p.terms()) {
    std::vector<Term> prod;
    if (c != 1 || mono.empty()) prod.push_back(constant(c));
    for (const auto& [v, e] : mono)
      for (int i = 0; i < e; ++i) prod.push_back(var(v));
    sum.push_back(mul(std::move(prod)));
  }
  return add(std::move(sum));
}

Formula Formula::eq(Term a, Term b) {
  Formula f;
  f.kind = Kind::Eq;
  f.lhs = std::move(a);
  f.rhs = std::move(b);
  return f;
}

Formula Formula::conj(std::vector<Formula> parts) {
  Formula f;
  f.kind = Kind::And;
  f.children = std::move(parts);
  return f;
}

Formula Formula::disj(std::vector<Formula> parts) {
  Formula f;
  f.kind = Kind::Or;
  f.children = std::move(parts);
  return f;
}

Formula Formula::exists(std::vector<std::string> vars, Formula body) {
  Formula f;
  f.kind = Kind::Exists;
  f.vars = std::move(vars);
  f.children.push_back(std::move(body));
  return f;
}

Formula Formula::in_subring(Term t) {
  Formula f;
  f.kind = Kind::InSubring;
  f.lhs = std::move(t);
  return f;
}

namespace {

void write_rational(const Rational& c, std::string& out) {
  out += c.get_num().get_str();
  out += '/';
  out += c.get_den().get_str();
}

void write_term(const Term& t, std::string& out) {
  switch (t.kind) {
    case Term::Kind::Var:
      out += t.name;
      return;
    case Term::Kind::Const:
      write_rational(t.value, out);
      return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      out += t.kind == Term::Kind::Add ? "(+" : "(*";
      for (const auto& a : t.args) {
        out += ' ';
        write_term(a, out);
      }
      out += ')';
      return;
  }
}

void write_formula(const Formula& f, std::string& out) {
  switch (f.kind) {
    case Formula::Kind::Eq:
      out += "(eq ";
      write_term(f.lhs, out);
      out += ' ';
      write_term(f.rhs, out);
      out += ')';
      return;
    case Formula::Kind::InSubring:
      out += "(in-subring ";
      write_term(f.lhs, out);
      out += ')';
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      out += f.kind == Formula::Kind::And ? "(and" : "(or";
      for (const auto& c : f.children) {
        out += ' ';
        write_formula(c, out);
      }
      out += ')';
      return;
    case Formula::Kind::Exists:
      out += "(exists (";
      for (std::size_t i = 0; i < f.vars.size(); ++i) {
        if (i) out += ' ';
        out += f.vars[i];
      }
      out += ") ";
      write_formula(f.children.at(0), out);
      out += ')';
      return;
  }
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Formula formula() {
    expect('(');
    std::size_t at = pos_;
    std::string kw = atom();
    Formula f;
    if (kw == "eq") {
      Term a = term();
      Term b = term();
      f = Formula::eq(std::move(a), std::move(b));
    } else if (kw == "in-subring") {
      f = Formula::in_subring(term());
    } else if (kw == "and" || kw == "or") {
      std::vector<Formula> parts;
      while (peek() != ')') parts.push_back(formula());
      f = kw == "and" ? Formula::conj(std::move(parts)) : Formula::disj(std::move(parts));
    } else if (kw == "exists") {
      expect('(');
      std::vector<std::string> vars;
      while (peek() != ')') {
        std::size_t vat = pos_;
        std::string v = atom();
        if (!valid_name(v)) throw ParseError("invalid variable name '" + v + "'", vat);
        vars.push_back(std::move(v));
      }
      expect(')');
      f = Formula::exists(std::move(vars), formula());
    } else {
      throw ParseError("unknown keyword '" + kw + "'", at);
    }
    expect(')');
    return f;
  }

  Term term() {
    skip();
    if (peek() == '(') {
      expect('(');
      std::size_t at = pos_;
      std::string op = atom();
      if (op != "+" && op != "*") throw ParseError("expected + or * but found '" + op + "'", at);
      std::vector<Term> args;
      while (peek() != ')') args.push_back(term());
      if (args.empty()) throw ParseError("empty " + op, at);
      expect(')');
      Term t;
      t.kind = op == "+" ? Term::Kind::Add : Term::Kind::Mul;
      t.args = std::move(args);
      return t;
    }
    std::size_t at = pos_;
    std::string a = atom();
    if (std::isdigit(static_cast<unsigned char>(a[0])) || a[0] == '-') {
      try {
        return Term::constant(parse_rational(a));
      } catch (const std::exception&) {
        throw ParseError("invalid rational '" + a + "'", at);
      }
    }
    if (!valid_name(a)) throw ParseError("invalid name '" + a + "'", at);
    return Term::var(a);
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    return s_[pos_];
  }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  std::string atom() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
           s_[pos_] != ')')
      ++pos_;
    if (start == pos_) throw ParseError(pos_ >= s_.size() ? "unexpected end of input" : "expected a token", start);
    return s_.substr(start, pos_ - start);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

void term_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Var) out.insert(t.name);
  for (const auto& a : t.args) term_vars(a, out);
}

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  auto add_term = [&](const Term& t) {
    std::set<std::string> vs;
    term_vars(t, vs);
    for (const auto& v : vs)
      if (!bound.count(v)) out.insert(v);
  };
  switch (f.kind) {
    case Formula::Kind::Eq:
      add_term(f.lhs);
      add_term(f.rhs);
      return;
    case Formula::Kind::InSubring:
      add_term(f.lhs);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      for (const auto& c : f.children) collect_free(c, bound, out);
      return;
    case Formula::Kind::Exists: {
      std::vector<std::string> added;
      for (const auto& v : f.vars)
        if (bound.insert(v).second) added.push_back(v);
      collect_free(f.children.at(0), bound, out);
      for (const auto& v : added) bound.erase(v);
      return;
    }
  }
}

Rational eval_term(const Term& t, const std::map<std::string, Rational>& env) {
  switch (t.kind) {
    case Term::Kind::Var: {
      auto it = env.find(t.name);
      if (it == env.end()) throw InvalidInput("unassigned variable " + t.name);
      return it->second;
    }
    case Term::Kind::Const:
      return t.value;
    case Term::Kind::Add: {
      Rational s = 0;
      for (const auto& a : t.args) s += eval_term(a, env);
      return s;
    }
    case Term::Kind::Mul: {
      Rational s = 1;
      for (const auto& a : t.args) s *= eval_term(a, env);
      return s;
    }
  }
  return 0;
}

}  // namespace

std::string serialize(const Term& t) {
  std::string out;
  write_term(t, out);
  return out;
}

std::string serialize(const Formula& f) {
  std::string out;
  write_formula(f, out);
  return out;
}

Formula parse_formula(const std::string& text) {
  Parser p(text);
  Formula f = p.formula();
  p.finish();
  return f;
}

Term parse_term(const std::string& text) {
  Parser p(text);
  Term t = p.term();
  p.finish();
  return t;
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

MPoly to_mpoly(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Var:
      return MPoly::var(t.name);
    case Term::Kind::Const:
      return MPoly(t.value);
    case Term::Kind::Add: {
      MPoly s;
      for (const auto& a : t.args) s += to_mpoly(a);
      return s;
    }
    case Term::Kind::Mul: {
      MPoly s(1L);
      for (const auto& a : t.args) s = s * to_mpoly(a);
      return s;
    }
  }
  return MPoly();
}

SyntaxReport check_positive_existential(const Formula& f, const std::set<std::string>& free,
                                        bool allow_subring) {
  SyntaxReport rep;
  std::set<std::string> bound;
  std::function<bool(const Term&)> term_ok = [&](const Term& t) -> bool {
    switch (t.kind) {
      case Term::Kind::Var:
        if (!valid_name(t.name)) {
          rep.message = "invalid variable name '" + t.name + "'";
          return false;
        }
        if (!bound.count(t.name) && !free.count(t.name)) {
          rep.message = "undeclared free variable " + t.name;
          return false;
        }
        return true;
      case Term::Kind::Const:
        return true;
      case Term::Kind::Add:
      case Term::Kind::Mul:
        if (t.args.empty()) {
          rep.message = "empty sum or product";
          return false;
        }
        return std::all_of(t.args.begin(), t.args.end(), term_ok);
    }
    return false;
  };
  std::function<bool(const Formula&)> ok = [&](const Formula& g) -> bool {
    switch (g.kind) {
      case Formula::Kind::Eq:
        return term_ok(g.lhs) && term_ok(g.rhs);
      case Formula::Kind::InSubring:
        if (!allow_subring) {
          rep.message = "subring predicate outside the language of pairs of rings";
          return false;
        }
        return term_ok(g.lhs);
      case Formula::Kind::And:
      case Formula::Kind::Or:
        return std::all_of(g.children.begin(), g.children.end(), ok);
      case Formula::Kind::Exists: {
        if (g.vars.empty() || g.children.size() != 1) {
          rep.message = "malformed quantifier";
          return false;
        }
        for (const auto& v : g.vars) {
          if (!valid_name(v) || bound.count(v) || free.count(v)) {
            rep.message = "variable " + v + " is invalid or bound twice";
            return false;
          }
        }
        std::set<std::string> local(g.vars.begin(), g.vars.end());
        if (local.size() != g.vars.size()) {
          rep.message = "repeated variable in quantifier";
          return false;
        }
        bound.insert(local.begin(), local.end());
        bool r = ok(g.children[0]);
        for (const auto& v : local) bound.erase(v);
        return r;
      }
    }
    return false;
  };
  rep.ok = ok(f);
  return rep;
}

std::string FormulaStats::to_string() const {
  return "quantifiers=" + std::to_string(quantifiers) + "\ndisjuncts=" + std::to_string(disjuncts) +
         "\nequations=" + std::to_string(equations) + "\nparameters=" + std::to_string(parameters) +
         "\nsize=" + std::to_string(size) + "\n";
}

FormulaStats stats(const Formula& f) {
  FormulaStats s;
  std::set<Rational> params;
  std::function<void(const Term&)> tw = [&](const Term& t) {
    if (t.kind == Term::Kind::Const && t.value != 0 && t.value != 1) params.insert(t.value);
    for (const auto& a : t.args) tw(a);
  };
  std::function<void(const Formula&)> fw = [&](const Formula& g) {
    switch (g.kind) {
      case Formula::Kind::Eq:
        ++s.equations;
        tw(g.lhs);
        tw(g.rhs);
        break;
      case Formula::Kind::InSubring:
        tw(g.lhs);
        break;
      case Formula::Kind::Or:
        s.disjuncts += g.children.size();
        break;
      case Formula::Kind::Exists:
        s.quantifiers += g.vars.size();
        break;
      case Formula::Kind::And:
        break;
    }
    for (const auto& c : g.children) fw(c);
  };
  fw(f);
  s.parameters = params.size();
  s.size = serialize(f).size();
  return s;
}

bool eval_quantifier_free(const Formula& f, const std::map<std::string, Rational>& env) {
  switch (f.kind) {
    case Formula::Kind::Eq:
      return eval_term(f.lhs, env) == eval_term(f.rhs, env);
    case Formula::Kind::InSubring:
      eval_term(f.lhs, env);
      return true;
    case Formula::Kind::And:
      return std::all_of(f.children.begin(), f.children.end(),
                         [&](const Formula& c) { return eval_quantifier_free(c, env); });
    case Formula::Kind::Or:
      return std::any_of(f.children.begin(), f.children.end(),
                         [&](const Formula& c) { return eval_quantifier_free(c, env); });
    case Formula::Kind::Exists:
      throw InvalidInput("eval_quantifier_free: formula has quantifiers");
  }
  return false;
}

namespace {

// Polynomial equation p = 0 over indexed variables.
struct Monomial {
  Rational coeff;
  std::vector<std::pair<int, int>> factors;  // (variable, exponent)
};

struct Node {
  Formula::Kind kind = Formula::Kind::And;
  std::vector<Monomial> poly;  // Eq
  std::vector<Node> kids;
};

class Prober {
 public:
  Prober(long height, uint64_t budget) : budget_(budget) {
    values_.push_back(0);
    for (long h = 1; h <= height; ++h)
      for (long d = 1; d <= h; ++d)
        for (long num = -h; num <= h; ++num) {
          if (num == 0 || std::max(std::labs(num), d) != h || std::gcd(std::labs(num), d) != 1) continue;
          Rational v(num, d);
          v.canonicalize();
          values_.push_back(v);
        }
  }

  int index(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(names_.size());
    ids_.emplace(name, id);
    names_.push_back(name);
    return id;
  }

  Node lower(const Formula& f, std::map<std::string, int>& scope) {
    Node n;
    n.kind = f.kind;
    switch (f.kind) {
      case Formula::Kind::Eq: {
        MPoly p = to_mpoly(f.lhs) - to_mpoly(f.rhs);
        for (const auto& [mono, c] : p.terms()) {
          Monomial m;
          m.coeff = c;
          for (const auto& [v, e] : mono) {
            auto it = scope.find(v);
            int id = it != scope.end() ? it->second : index(v);
            m.factors.emplace_back(id, e);
          }
          n.poly.push_back(std::move(m));
        }
        return n;
      }
      case Formula::Kind::InSubring:
        n.kind = Formula::Kind::And;
        return n;
      case Formula::Kind::And:
      case Formula::Kind::Or:
        for (const auto& c : f.children) n.kids.push_back(lower(c, scope));
        return n;
      case Formula::Kind::Exists: {
        n.kind = Formula::Kind::And;
        std::map<std::string, int> inner = scope;
        for (const auto& v : f.vars) inner[v] = index("#" + std::to_string(names_.size()) + ":" + v);
        n.kids.push_back(lower(f.children.at(0), inner));
        return n;
      }
    }
    return n;
  }

  void init_env() { env_.assign(names_.size(), std::nullopt); }
  void assign(int id, const Rational& v) { env_[static_cast<std::size_t>(id)] = v; }

  // 1: satisfied, 0: violated, -1: undetermined; sets solved when linear.
  int inspect(const std::vector<Monomial>& poly, int& solve_var, Rational& solve_value) {
    Rational constant = 0, linear = 0;
    int open = -1;
    bool linear_only = true;
    for (const auto& m : poly) {
      Rational c = m.coeff;
      int mono_open = -1, mono_exp = 0, opens = 0;
      for (const auto& [v, e] : m.factors) {
        const auto& val = env_[static_cast<std::size_t>(v)];
        if (val) {
          Rational pw = 1;
          for (int i = 0; i < e; ++i) pw *= *val;
          c *= pw;
        } else {
          ++opens;
          mono_open = v;
          mono_exp = e;
        }
      }
      if (opens == 0) {
        constant += c;
        continue;
      }
      if (c == 0) continue;
      if (opens > 1 || mono_exp != 1 || (open != -1 && open != mono_open)) {
        linear_only = false;
        if (open == -1) open = mono_open;
        continue;
      }
      open = mono_open;
      linear += c;
    }
    if (open == -1) return constant == 0 ? 1 : 0;
    if (linear_only && linear != 0) {
      solve_var = open;
      solve_value = -constant / linear;
      return 2;
    }
    if (linear_only && linear == 0) return constant == 0 ? 1 : 0;
    solve_var = open;
    return -1;
  }

  bool solve(std::vector<const Node*> agenda) {
    std::vector<const Node*> eqs, ors;
    while (!agenda.empty()) {
      const Node* n = agenda.back();
      agenda.pop_back();
      if (n->kind == Formula::Kind::Eq) eqs.push_back(n);
      else if (n->kind == Formula::Kind::Or) ors.push_back(n);
      else
        for (const auto& k : n->kids) agenda.push_back(&k);
    }
    std::vector<int> assigned;
    auto undo = [&]() {
      for (int v : assigned) env_[static_cast<std::size_t>(v)].reset();
    };
    int branch_var = -1;
    for (bool progress = true; progress;) {
      progress = false;
      branch_var = -1;
      for (std::size_t i = 0; i < eqs.size();) {
        int var = -1;
        Rational val;
        int st = inspect(eqs[i]->poly, var, val);
        if (st == 0) {
          undo();
          return false;
        }
        if (st == 1) {
          eqs.erase(eqs.begin() + static_cast<long>(i));
          continue;
        }
        if (st == 2) {
          assign(var, val);
          assigned.push_back(var);
          eqs.erase(eqs.begin() + static_cast<long>(i));
          progress = true;
          continue;
        }
        if (branch_var == -1) branch_var = var;
        ++i;
      }
    }
    if (!ors.empty()) {
      const Node* o = ors.back();
      ors.pop_back();
      for (const auto& k : o->kids) {
        if (++nodes_ > budget_) break;
        std::vector<const Node*> next(eqs.begin(), eqs.end());
        next.insert(next.end(), ors.begin(), ors.end());
        next.push_back(&k);
        if (solve(next)) return true;
      }
      undo();
      return false;
    }
    if (eqs.empty()) return true;
    for (const Rational& v : values_) {
      if (++nodes_ > budget_) break;
      assign(branch_var, v);
      if (solve(std::vector<const Node*>(eqs.begin(), eqs.end()))) return true;
    }
    env_[static_cast<std::size_t>(branch_var)].reset();
    undo();
    return false;
  }

  std::map<std::string, Rational> witness() const {
    std::map<std::string, Rational> out;
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (env_[i]) out[names_[i][0] == '#' ? names_[i].substr(names_[i].find(':') + 1) : names_[i]] = *env_[i];
    return out;
  }

  uint64_t nodes() const { return nodes_; }

 private:
  uint64_t budget_;
  uint64_t nodes_ = 0;
  std::vector<Rational> values_;
  std::map<std::string, int> ids_;
  std::vector<std::string> names_;
  std::vector<std::optional<Rational>> env_;
};

}  // namespace

BoundedResult bounded_eval(const Formula& f, const std::map<std::string, Rational>& assignment, long height,
                           uint64_t node_budget) {
  for (const auto& v : free_variables(f))
    if (!assignment.count(v)) throw InvalidInput("bounded_eval: free variable " + v + " is unassigned");
  Prober pr(height, node_budget);
  std::map<std::string, int> scope;
  Node root = pr.lower(f, scope);
  for (const auto& kv : assignment) pr.index(kv.first);
  pr.init_env();
  for (const auto& [k, v] : assignment) pr.assign(pr.index(k), v);
  BoundedResult r;
  r.sat = pr.solve({&root});
  r.nodes = pr.nodes();
  if (r.sat) r.witness = pr.witness();
  return r;
}

}  // namespace rootless
