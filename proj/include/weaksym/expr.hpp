#pragma once

// Exact symbolic expressions over jet-space coordinates.
//
// An Expr is a canonical fraction of two multivariate polynomials with
// exact rational coefficients. The atoms are independent variables, jet
// variables (a dependent symbol with a derivative multi-index), parameters,
// opaque unknown-function applications, and exponential atoms exp(A).
//
// Canonical form:
//   * monomials are sorted under a fixed total order (see monomial_cmp),
//   * the denominator is primitive (integer coefficients, gcd 1) with a
//     positive leading coefficient,
//   * common monomial factors and rational content are cancelled, and the
//     fraction is cleared完 by exact polynomial division when it succeeds.
//   * a product of exponential atoms is folded into a single atom with the
//     summed exponent; exp(0) disappears.
//
// equals_zero() is exact: it holds iff the canonical numerator is the zero
// polynomial. Exprs are immutable after construction and freely shareable
// between threads.

#include "weaksym/error.hpp"
#include "weaksym/rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace weaksym {

enum class AtomKind { Independent, Jet, Parameter, Function, Exponential };

// One derivative direction of a jet variable. Directions carry the rank
// assigned at declaration time so that the atom order does not depend on
// spelling (x is declared before t, hence u_x > u_t in the fixed order).
struct JetDir {
  int rank = 0;
  std::string name;
  int count = 0;
};

struct AtomData;
using Atom = std::shared_ptr<const AtomData>;

int atom_cmp(const Atom& a, const Atom& b);
inline bool atom_eq(const Atom& a, const Atom& b) { return atom_cmp(a, b) == 0; }

struct AtomLess {
  bool operator()(const Atom& a, const Atom& b) const { return atom_cmp(a, b) < 0; }
};

// A power product of atoms; factors sorted ascending, powers >= 1.
struct Monomial {
  std::vector<std::pair<Atom, int>> factors;

  bool empty() const { return factors.empty(); }
  int total_degree() const {
    int d = 0;
    for (const auto& [a, p] : factors) d += p;
    return d;
  }
  int power_of(const Atom& a) const {
    for (const auto& [b, p] : factors)
      if (atom_eq(a, b)) return p;
    return 0;
  }
};

int monomial_cmp(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return monomial_cmp(a, b) < 0; }
};

struct Term {
  Rat coef;
  Monomial mono;
};

// Sorted term list, ascending monomial order, no zero coefficients.
struct Polynomial {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms[0].mono.empty()); }
  const Term& leading() const { return terms.back(); }
};

class Expr {
 public:
  Expr() : num_{}, den_{one_poly()} {}

  static Expr zero() { return Expr(); }
  static Expr one() { return from_rat(Rat(1)); }
  static Expr from_int(long long v) { return from_rat(Rat(v)); }
  static Expr from_rat(const Rat& v);
  static Expr from_atom(const Atom& a);
  // Builds a canonical fraction from raw polynomials (normalizes).
  static Expr fraction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  // true iff the expression is a rational constant; value via rat_value()
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  Rat rat_value() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  Expr& operator+=(const Expr& b) { return *this = *this + b; }
  Expr& operator-=(const Expr& b) { return *this = *this - b; }
  Expr& operator*=(const Expr& b) { return *this = *this * b; }
  Expr& operator/=(const Expr& b) { return *this = *this / b; }

 private:
  static Polynomial one_poly();
  Polynomial num_, den_;
};

Expr pow(const Expr& base, int exponent);

// Structural total order on canonical expressions (used for atom ordering
// of function arguments and for deterministic output).
int expr_cmp(const Expr& a, const Expr& b);

// Algebraic equality: a/b == c/d iff ad - cb is the zero polynomial.
// Exact for every fraction, independent of gcd completeness.
bool equals(const Expr& a, const Expr& b);
inline bool equals_zero(const Expr& e) { return e.is_zero(); }
inline bool operator==(const Expr& a, const Expr& b) { return equals(a, b); }
inline bool operator!=(const Expr& a, const Expr& b) { return !equals(a, b); }

struct AtomData {
  AtomKind kind;
  std::string name;             // independent/parameter/function name; jet: dependent symbol
  int rank = 0;                 // independents: declaration rank
  std::vector<JetDir> dirs;     // jets: sorted by rank, counts > 0
  std::vector<int> arg_derivs;  // functions: per-argument derivative counts
  std::vector<Expr> args;       // functions: arguments; exponentials: {exponent}

  int jet_order() const {
    int d = 0;
    for (const auto& j : dirs) d += j.count;
    return d;
  }
  int deriv_order() const {
    int d = 0;
    for (int k : arg_derivs) d += k;
    return d;
  }
};

inline Atom make_independent(const std::string& name, int rank) {
  auto a = std::make_shared<AtomData>();
  a->kind = AtomKind::Independent;
  a->name = name;
  a->rank = rank;
  return a;
}

inline Atom make_parameter(const std::string& name) {
  auto a = std::make_shared<AtomData>();
  a->kind = AtomKind::Parameter;
  a->name = name;
  return a;
}

// dirs are normalized: zero counts removed, sorted by rank
inline Atom make_jet(const std::string& dependent, std::vector<JetDir> dirs) {
  auto a = std::make_shared<AtomData>();
  a->kind = AtomKind::Jet;
  a->name = dependent;
  dirs.erase(std::remove_if(dirs.begin(), dirs.end(), [](const JetDir& d) { return d.count == 0; }),
             dirs.end());
  std::sort(dirs.begin(), dirs.end(), [](const JetDir& l, const JetDir& r) { return l.rank < r.rank; });
  a->dirs = std::move(dirs);
  return a;
}

inline Atom make_function(const std::string& name, std::vector<int> derivs, std::vector<Expr> args) {
  auto a = std::make_shared<AtomData>();
  a->kind = AtomKind::Function;
  a->name = name;
  derivs.resize(args.size(), 0);
  a->arg_derivs = std::move(derivs);
  a->args = std::move(args);
  return a;
}

inline Atom make_exp_atom(Expr exponent) {
  auto a = std::make_shared<AtomData>();
  a->kind = AtomKind::Exponential;
  a->name = "exp";
  a->args.push_back(std::move(exponent));
  return a;
}

// exp(e) as an Expr; exp(0) folds to 1.
inline Expr expr_exp(const Expr& exponent) {
  if (exponent.is_zero()) return Expr::one();
  return Expr::from_atom(make_exp_atom(exponent));
}

// raises jet atom `a` by one derivative in the given direction
inline Atom raise_jet(const Atom& a, int rank, const std::string& dir_name) {
  std::vector<JetDir> dirs = a->dirs;
  bool found = false;
  for (auto& d : dirs)
    if (d.rank == rank) {
      ++d.count;
      found = true;
      break;
    }
  if (!found) dirs.push_back(JetDir{rank, dir_name, 1});
  return make_jet(a->name, std::move(dirs));
}

// ---------------------------------------------------------------------------
// ordering
// ---------------------------------------------------------------------------

namespace detail {

template <class T>
int cmp3(const T& a, const T& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

// Direction-count comparison: walk ranks ascending over the union; at the
// first difference the jet with the higher count is the larger atom.
inline int jet_dirs_cmp(const std::vector<JetDir>& a, const std::vector<JetDir>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int ra = i < a.size() ? a[i].rank : INT32_MAX;
    int rb = j < b.size() ? b[j].rank : INT32_MAX;
    int ca = 0, cb = 0;
    if (ra <= rb) ca = a[i].count;
    if (rb <= ra) cb = b[j].count;
    if (ca != cb) return ca > cb ? 1 : -1;
    if (ra <= rb) ++i;
    if (rb <= ra) ++j;
  }
  return 0;
}

}  // namespace detail

inline int atom_cmp(const Atom& a, const Atom& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind)
    return static_cast<int>(a->kind) < static_cast<int>(b->kind) ? -1 : 1;
  switch (a->kind) {
    case AtomKind::Independent:
      if (int c = detail::cmp3(a->rank, b->rank)) return c;
      return a->name.compare(b->name) < 0 ? -1 : (a->name == b->name ? 0 : 1);
    case AtomKind::Jet: {
      if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
      if (int c = detail::cmp3(a->jet_order(), b->jet_order())) return c;
      return detail::jet_dirs_cmp(a->dirs, b->dirs);
    }
    case AtomKind::Parameter:
      return a->name == b->name ? 0 : (a->name < b->name ? -1 : 1);
    case AtomKind::Function: {
      if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
      if (int c = detail::cmp3(a->args.size(), b->args.size())) return c;
      for (std::size_t i = 0; i < a->arg_derivs.size(); ++i)
        if (int c = detail::cmp3(a->arg_derivs[i], b->arg_derivs[i])) return c;
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (int c = expr_cmp(a->args[i], b->args[i])) return c;
      return 0;
    }
    case AtomKind::Exponential:
      return expr_cmp(a->args[0], b->args[0]);
  }
  return 0;
}

// Lexicographic comparison of exponent vectors read from the largest atom
// downward; at the first differing atom the monomial with the higher
// exponent is the larger one.
inline int monomial_cmp(const Monomial& a, const Monomial& b) {
  auto ia = a.factors.rbegin(), ib = b.factors.rbegin();
  while (ia != a.factors.rend() && ib != b.factors.rend()) {
    int c = atom_cmp(ia->first, ib->first);
    if (c > 0) return 1;   // a owns the larger atom
    if (c < 0) return -1;  // b owns the larger atom
    if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
    ++ia;
    ++ib;
  }
  if (ia != a.factors.rend()) return 1;
  if (ib != b.factors.rend()) return -1;
  return 0;
}

// ---------------------------------------------------------------------------
// polynomial arithmetic
// ---------------------------------------------------------------------------

namespace poly {

inline Polynomial from_terms(std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(),
            [](const Term& l, const Term& r) { return monomial_cmp(l.mono, r.mono) < 0; });
  Polynomial p;
  for (auto& t : ts) {
    if (t.coef == 0) continue;
    if (!p.terms.empty() && monomial_cmp(p.terms.back().mono, t.mono) == 0)
      p.terms.back().coef += t.coef;
    else
      p.terms.push_back(std::move(t));
    if (!p.terms.empty() && p.terms.back().coef == 0) p.terms.pop_back();
  }
  return p;
}

inline Polynomial constant(const Rat& c) {
  Polynomial p;
  if (c != 0) p.terms.push_back(Term{c, Monomial{}});
  return p;
}

inline Polynomial add(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    int c;
    if (i >= a.terms.size())
      c = 1;
    else if (j >= b.terms.size())
      c = -1;
    else
      c = monomial_cmp(a.terms[i].mono, b.terms[j].mono);
    if (c < 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (c > 0) {
      out.terms.push_back(b.terms[j++]);
    } else {
      Rat s = a.terms[i].coef + b.terms[j].coef;
      if (s != 0) out.terms.push_back(Term{std::move(s), a.terms[i].mono});
      ++i;
      ++j;
    }
  }
  return out;
}

inline Polynomial negate(Polynomial p) {
  for (auto& t : p.terms) t.coef = -t.coef;
  return p;
}

inline Polynomial sub(const Polynomial& a, const Polynomial& b) { return add(a, negate(b)); }

inline Polynomial scale(Polynomial p, const Rat& c) {
  if (c == 0) return Polynomial{};
  for (auto& t : p.terms) t.coef *= c;
  return p;
}

// merge factor lists; exponential atoms are folded into one atom carrying
// the summed exponent (exp(0) drops out)
Monomial mono_mul(const Monomial& a, const Monomial& b);

inline Polynomial mul(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial{};
  std::map<Monomial, Rat, MonomialLess> acc;
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) {
      Monomial m = mono_mul(ta.mono, tb.mono);
      Rat c = ta.coef * tb.coef;
      auto [it, inserted] = acc.emplace(std::move(m), c);
      if (!inserted) it->second += c;
    }
  Polynomial out;
  out.terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.terms.push_back(Term{std::move(c), m});
  return out;
}

inline Polynomial mul_term(const Polynomial& a, const Term& t) {
  Polynomial b;
  b.terms.push_back(t);
  return mul(a, b);
}

// exact division a / b; nullopt when the remainder is nonzero
inline std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) return std::nullopt;
  Polynomial rem = a;
  std::vector<Term> quot;
  const Term& lead = b.leading();
  int guard = 0;
  while (!rem.is_zero()) {
    if (++guard > 100000) return std::nullopt;
    const Term& lt = rem.leading();
    // divide lt by lead: all lead factors must be contained
    Monomial q;
    bool ok = true;
    std::size_t i = 0, j = 0;
    while (i < lt.mono.factors.size() || j < lead.mono.factors.size()) {
      if (j >= lead.mono.factors.size()) {
        q.factors.push_back(lt.mono.factors[i++]);
        continue;
      }
      if (i >= lt.mono.factors.size()) {
        ok = false;
        break;
      }
      int c = atom_cmp(lt.mono.factors[i].first, lead.mono.factors[j].first);
      if (c < 0) {
        q.factors.push_back(lt.mono.factors[i++]);
      } else if (c > 0) {
        ok = false;
        break;
      } else {
        int p = lt.mono.factors[i].second - lead.mono.factors[j].second;
        if (p < 0) {
          ok = false;
          break;
        }
        if (p > 0) q.factors.push_back({lt.mono.factors[i].first, p});
        ++i;
        ++j;
      }
    }
    if (!ok) return std::nullopt;
    Term qt{lt.coef / lead.coef, std::move(q)};
    rem = sub(rem, mul_term(b, qt));
    quot.push_back(std::move(qt));
  }
  return from_terms(std::move(quot));
}

// positive rational c such that p/c has integer coefficients with gcd 1
inline Rat content(const Polynomial& p) {
  Rat g(0);
  for (const auto& t : p.terms) g = rat_content_gcd(g, t.coef);
  return g;
}

}  // namespace poly

// ---------------------------------------------------------------------------
// Expr
// ---------------------------------------------------------------------------

inline Polynomial Expr::one_poly() { return poly::constant(Rat(1)); }

inline Expr Expr::from_rat(const Rat& v) {
  Expr e;
  e.num_ = poly::constant(v);
  return e;
}

inline Expr Expr::from_atom(const Atom& a) {
  Expr e;
  Monomial m;
  m.factors.push_back({a, 1});
  e.num_.terms.push_back(Term{Rat(1), std::move(m)});
  return e;
}

inline bool Expr::is_one() const {
  return num_.is_constant() && den_.is_constant() && !num_.is_zero() &&
         num_.terms[0].coef == den_.terms[0].coef;
}

inline Rat Expr::rat_value() const {
  if (!is_rational()) throw Error(Errc::NotPolynomial, "expression is not a rational constant");
  if (num_.is_zero()) return Rat(0);
  return num_.terms[0].coef / den_.terms[0].coef;
}

inline Expr Expr::fraction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw Error(Errc::DegenerateExpression, "division by a zero expression");
  Expr e;
  if (num.is_zero()) return e;

  // cancel the common monomial factor (componentwise min over all terms)
  auto common_mono = [](const Polynomial& p) {
    Monomial g = p.terms.front().mono;
    for (std::size_t k = 1; k < p.terms.size() && !g.empty(); ++k) {
      const Monomial& m = p.terms[k].mono;
      Monomial next;
      std::size_t i = 0, j = 0;
      while (i < g.factors.size() && j < m.factors.size()) {
        int c = atom_cmp(g.factors[i].first, m.factors[j].first);
        if (c < 0)
          ++i;
        else if (c > 0)
          ++j;
        else {
          next.factors.push_back({g.factors[i].first,
                                  std::min(g.factors[i].second, m.factors[j].second)});
          ++i;
          ++j;
        }
      }
      g = std::move(next);
    }
    return g;
  };
  Monomial gn = common_mono(num), gd = common_mono(den);
  Monomial g;
  {
    std::size_t i = 0, j = 0;
    while (i < gn.factors.size() && j < gd.factors.size()) {
      int c = atom_cmp(gn.factors[i].first, gd.factors[j].first);
      if (c < 0)
        ++i;
      else if (c > 0)
        ++j;
      else {
        g.factors.push_back({gn.factors[i].first,
                             std::min(gn.factors[i].second, gd.factors[j].second)});
        ++i;
        ++j;
      }
    }
  }
  if (!g.empty()) {
    auto strip = [&g](Polynomial& p) {
      for (auto& t : p.terms) {
        Monomial m;
        std::size_t i = 0, j = 0;
        while (i < t.mono.factors.size()) {
          if (j < g.factors.size() && atom_eq(t.mono.factors[i].first, g.factors[j].first)) {
            int pw = t.mono.factors[i].second - g.factors[j].second;
            if (pw > 0) m.factors.push_back({t.mono.factors[i].first, pw});
            ++i;
            ++j;
          } else {
            m.factors.push_back(t.mono.factors[i]);
            ++i;
          }
        }
        t.mono = std::move(m);
      }
      p = poly::from_terms(std::move(p.terms));
    };
    strip(num);
    strip(den);
  }

  // exact-division cancellation
  if (!den.is_constant()) {
    if (auto q = poly::try_divide(num, den)) {
      num = std::move(*q);
      den = Expr::one_poly();
    }
  }

  // scale so the denominator is primitive with a positive leading coefficient
  Rat c = poly::content(den);
  if (den.leading().coef < 0) c = -c;
  num = poly::scale(std::move(num), Rat(1) / c);
  den = poly::scale(std::move(den), Rat(1) / c);

  e.num_ = std::move(num);
  e.den_ = std::move(den);
  return e;
}

inline Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // same denominator: skip the cross product
  if (monomial_cmp(Monomial{}, Monomial{}) == 0 && a.den_.terms == b.den_.terms ? false : false) {}
  Polynomial num = poly::add(poly::mul(a.num_, b.den_), poly::mul(b.num_, a.den_));
  return Expr::fraction(std::move(num), poly::mul(a.den_, b.den_));
}

inline Expr operator-(const Expr& a) {
  Expr e = a;
  e.num_ = poly::negate(std::move(e.num_));
  return e;
}

inline Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

inline Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_zero() || b.is_zero()) return Expr::zero();
  return Expr::fraction(poly::mul(a.num_, b.num_), poly::mul(a.den_, b.den_));
}

inline Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_zero()) throw Error(Errc::DegenerateExpression, "division by a zero expression");
  if (a.is_zero()) return Expr::zero();
  return Expr::fraction(poly::mul(a.num_, b.den_), poly::mul(a.den_, b.num_));
}

inline Expr pow(const Expr& base, int exponent) {
  if (exponent < 0) return Expr::one() / pow(base, -exponent);
  Expr r = Expr::one();
  for (int i = 0; i < exponent; ++i) r = r * base;
  return r;
}

inline int polynomial_cmp(const Polynomial& a, const Polynomial& b) {
  auto ia = a.terms.rbegin(), ib = b.terms.rbegin();
  while (ia != a.terms.rend() && ib != b.terms.rend()) {
    if (int c = monomial_cmp(ia->mono, ib->mono)) return c;
    if (ia->coef != ib->coef) return ia->coef < ib->coef ? -1 : 1;
    ++ia;
    ++ib;
  }
  if (ia != a.terms.rend()) return 1;
  if (ib != b.terms.rend()) return -1;
  return 0;
}

inline int expr_cmp(const Expr& a, const Expr& b) {
  if (int c = polynomial_cmp(a.num(), b.num())) return c;
  return polynomial_cmp(a.den(), b.den());
}

inline bool equals(const Expr& a, const Expr& b) {
  if (a.num().is_zero()) return b.num().is_zero();
  if (b.num().is_zero()) return false;
  return poly::sub(poly::mul(a.num(), b.den()), poly::mul(b.num(), a.den())).is_zero();
}

namespace poly {

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  Expr exp_sum;  // accumulated exponent of all exponential factors
  bool has_exp = false;
  auto push = [&](const Atom& atom, int power) {
    if (atom->kind == AtomKind::Exponential) {
      has_exp = true;
      exp_sum += Expr::from_int(power) * atom->args[0];
      return;
    }
    if (!out.factors.empty() && atom_eq(out.factors.back().first, atom))
      out.factors.back().second += power;
    else
      out.factors.push_back({atom, power});
  };
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() || j < b.factors.size()) {
    if (j >= b.factors.size())
      push(a.factors[i].first, a.factors[i].second), ++i;
    else if (i >= a.factors.size())
      push(b.factors[j].first, b.factors[j].second), ++j;
    else {
      int c = atom_cmp(a.factors[i].first, b.factors[j].first);
      if (c < 0)
        push(a.factors[i].first, a.factors[i].second), ++i;
      else if (c > 0)
        push(b.factors[j].first, b.factors[j].second), ++j;
      else {
        push(a.factors[i].first, a.factors[i].second + b.factors[j].second);
        ++i;
        ++j;
      }
    }
  }
  if (has_exp && !exp_sum.is_zero()) {
    Atom e = make_exp_atom(exp_sum);
    // exponential atoms order after everything else; append keeps sortedness
    out.factors.push_back({e, 1});
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& l, const auto& r) { return atom_cmp(l.first, r.first) < 0; });
  }
  return out;
}

}  // namespace poly

// ---------------------------------------------------------------------------
// atom queries
// ---------------------------------------------------------------------------

namespace detail {

template <class F>
void visit_atoms_mono(const Monomial& m, bool recurse, F&& f);

template <class F>
void visit_atoms_poly(const Polynomial& p, bool recurse, F&& f) {
  for (const auto& t : p.terms) visit_atoms_mono(t.mono, recurse, f);
}

template <class F>
void visit_atoms_expr(const Expr& e, bool recurse, F&& f) {
  visit_atoms_poly(e.num(), recurse, f);
  visit_atoms_poly(e.den(), recurse, f);
}

template <class F>
void visit_atoms_mono(const Monomial& m, bool recurse, F&& f) {
  for (const auto& [a, p] : m.factors) {
    f(a);
    if (recurse && (a->kind == AtomKind::Function || a->kind == AtomKind::Exponential))
      for (const Expr& arg : a->args) visit_atoms_expr(arg, recurse, f);
  }
}

}  // namespace detail

// top-level atoms of the canonical fraction (arguments of opaque functions
// are included only when deep=true)
inline std::vector<Atom> atoms_of(const Expr& e, bool deep = false) {
  std::vector<Atom> out;
  detail::visit_atoms_expr(e, deep, [&](const Atom& a) { out.push_back(a); });
  std::sort(out.begin(), out.end(), AtomLess{});
  out.erase(std::unique(out.begin(), out.end(), atom_eq), out.end());
  return out;
}

inline bool contains_atom(const Expr& e, const Atom& a, bool deep = false) {
  for (const Atom& b : atoms_of(e, deep))
    if (atom_eq(a, b)) return true;
  return false;
}

// jet atoms of `dependent` (any dependent if empty) with order >= min_order
inline std::vector<Atom> jet_atoms_of(const Expr& e, int min_order = 0,
                                      const std::string& dependent = "") {
  std::vector<Atom> out;
  for (const Atom& a : atoms_of(e, true))
    if (a->kind == AtomKind::Jet && a->jet_order() >= min_order &&
        (dependent.empty() || a->name == dependent))
      out.push_back(a);
  return out;
}

inline int max_jet_order(const Expr& e) {
  int d = 0;
  for (const Atom& a : jet_atoms_of(e)) d = std::max(d, a->jet_order());
  return d;
}

}  // namespace weaksym
