#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iqg/monomial.hpp"
#include "iqg/rational.hpp"

namespace iqg {

// Substitution target: coefficient * monomial.
struct Target {
  GaussRational coeff{1};
  Monomial mono;

  Target() = default;
  Target(GaussRational c, Monomial m) : coeff(std::move(c)), mono(std::move(m)) {}
  explicit Target(Monomial m) : mono(std::move(m)) {}

  Target operator*(const Target& o) const { return {coeff * o.coeff, mono * o.mono}; }
  Target inverse() const { return {coeff.inverse(), mono.inverse()}; }
  Target pow(int e) const { return {coeff.pow(e), mono.pow(e)}; }

  friend bool operator==(const Target& a, const Target& b) { return a.coeff == b.coeff && a.mono == b.mono; }
  friend bool operator!=(const Target& a, const Target& b) { return !(a == b); }
  static int compare(const Target& a, const Target& b);
  std::string str() const;
};

using Substitution = std::map<Var, Target>;

// Laurent polynomial over the Gaussian rationals. Terms sorted ascending by
// monomial order, no zero coefficients.
class Poly {
 public:
  using Term = std::pair<Monomial, GaussRational>;

  Poly() = default;
  Poly(GaussRational c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(GaussRational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(const Monomial& m, GaussRational c = 1);
  explicit Poly(const Target& t) : Poly(t.mono, t.coeff) {}
  static Poly var(Var v, int e = 1) { return Poly(Monomial(v, e)); }
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_monomial() const { return t_.size() == 1; }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
  bool is_one() const { return t_.size() == 1 && t_[0].first.is_one() && t_[0].second.is_one(); }
  const Term& min_term() const { return t_.front(); }
  const Term& max_term() const { return t_.back(); }
  GaussRational constant_term() const;

  bool depends_on(Var v) const;
  bool contains_kind(VarKind k) const;
  int max_degree(Var v) const;
  int min_degree(Var v) const;
  // Terms of x-degree d, with x removed.
  Poly degree_part(Var x, int d) const;
  // Map x-degree -> coefficient (without x).
  std::map<int, Poly> by_degree(Var x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator*(const Poly& o) const;
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  Poly scaled(const GaussRational& c, const Monomial& m) const;
  Poly scaled(const Target& t) const { return scaled(t.coeff, t.mono); }
  Poly pow(unsigned e) const;

  // Exact quotient by a two-term divisor, if it divides.
  std::optional<Poly> divide_binomial(const Poly& b) const;

  Poly substitute(const Substitution& s) const;
  GaussRational eval(const std::map<Var, GaussRational>& values) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  static int compare(const Poly& a, const Poly& b);
  friend bool operator<(const Poly& a, const Poly& b) { return compare(a, b) < 0; }

  std::size_t hash() const;
  std::string str() const;

 private:
  std::vector<Term> t_;
};

}  // namespace iqg
