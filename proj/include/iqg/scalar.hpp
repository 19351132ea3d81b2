#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "iqg/poly.hpp"

namespace iqg {

// Element of the coefficient field, kept as num * prod F^e with each F a
// canonical polynomial (smallest term is exactly 1) and e != 0. Binomials
// are always moved into the factor list, split into linear pieces where a
// rational square root allows it.
class Scalar {
 public:
  using Factor = std::pair<Poly, int>;

  Scalar() = default;
  Scalar(GaussRational c) : num_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long c) : num_(GaussRational(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Poly& p);  // NOLINT(google-explicit-constructor)
  explicit Scalar(const Monomial& m, GaussRational c = 1) : num_(m, std::move(c)) {}
  explicit Scalar(const Target& t) : num_(t) {}
  static Scalar var(Var v, int e = 1) { return Scalar(Monomial(v, e)); }
  // 1 + c*m
  static Scalar binomial(const GaussRational& c, const Monomial& m);
  // Q^k, i.e. q^{k/2}
  static Scalar qpow(int k) { return var(var::Q, k); }

  const Poly& num() const { return num_; }
  const std::vector<Factor>& factors() const { return f_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return f_.empty() && num_.is_one(); }
  bool is_monomial() const { return f_.empty() && num_.is_monomial(); }
  bool depends_on(Var v) const;
  bool contains_kind(VarKind k) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o) { return *this += -o; }
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(int e) const;

  // Cancels denominator binomials that divide the numerator.
  Scalar& reduce();

  // Simultaneous substitution. A denominator factor that vanishes and
  // cannot be cancelled raises DenominatorVanishes.
  Scalar substitute(const Substitution& s) const;
  Scalar substitute(Var v, const Target& t) const { return substitute(Substitution{{v, t}}); }

  GaussRational eval(const std::map<Var, GaussRational>& values) const;

  bool equals(const Scalar& o) const;
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.equals(b); }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !a.equals(b); }

  // Structurally identical (same num and factor list).
  bool same_form(const Scalar& o) const { return num_ == o.num_ && f_ == o.f_; }

  std::string str() const;

  // Canonical form of a nonzero polynomial: p = unit * prod factors.
  static void canonicalize(const Poly& p, Target& unit, std::vector<Factor>& factors);

 private:
  void absorb_num();
  void add_factor(const Poly& f, int e);

  Poly num_;
  std::vector<Factor> f_;
};

}  // namespace iqg
