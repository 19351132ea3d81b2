#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "iqg/qtorus.hpp"

namespace iqg {

// Sorted (spectral variable, target) pairs; a target may still mention
// another free spectral variable (a linked pin such as v -> u^-1).
using Pins = std::vector<std::pair<Var, Target>>;

int compare_pins(const Pins& a, const Pins& b);
std::string pins_str(const Pins& p);
Substitution pin_substitution(const Pins& p);
bool has_linked_pin(const Pins& p);

struct DistKey {
  Pins pins;
  DMonomial dmon;
  friend bool operator<(const DistKey& a, const DistKey& b) {
    int c = compare_pins(a.pins, b.pins);
    if (c != 0) return c < 0;
    return a.dmon < b.dmon;
  }
};

struct DistTerm {
  Pins pins;
  Scalar coeff;
  DMonomial dmon;
};

// Finite sum of delta(pins) * coefficient * shift-monomial.
class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(const DistTerm& t) { add(t); }

  // delta(target/var) * coeff * dmon, with var substituted in coeff.
  static Distribution pinned(Var v, const Target& target, const Scalar& coeff, const DMonomial& dmon = {});
  static Distribution scalar(const Scalar& coeff, const DMonomial& dmon = {});

  const std::map<DistKey, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  std::vector<DistTerm> term_list() const;

  void add(const DistTerm& t);
  Distribution& operator+=(const Distribution& o);
  Distribution& operator-=(const Distribution& o);
  friend Distribution operator+(Distribution a, const Distribution& b) { return a += b; }
  friend Distribution operator-(Distribution a, const Distribution& b) { return a -= b; }

  std::string str() const;

 private:
  std::map<DistKey, Scalar> t_;
};

// Adds a pin to a term and substitutes it into the coefficient.
DistTerm pin_substitute(const DistTerm& t, Var v, const Target& target);

Distribution multiply_dist(const Distribution& x, const Distribution& y);
// s * x, where s may involve spectral variables pinned by x.
Distribution scale(const Scalar& s, const Distribution& x);
Distribution bracket_q(const Distribution& x, const Distribution& y, const Scalar& vparam);
Distribution symmetrize(const Distribution& x, Var a, Var b);
Distribution swap_vars(const Distribution& x, Var a, Var b);

// Rational function of one spectral variable, kept factored.
class FactorCurrent {
 public:
  FactorCurrent() = default;
  FactorCurrent(Var x, Scalar s) : x_(x), s_(std::move(s)) {}

  Var var() const { return x_; }
  const Scalar& scalar() const { return s_; }

  // f(x) -> f(x^-1)
  FactorCurrent inverted() const;
  // Top degree and leading coefficient of the expansion at x = infinity.
  int top_degree() const;
  Scalar leading_coefficient() const;
  // c * x^k * prod (1 - M x)^e view; factors without x are folded into c.
  struct View {
    Scalar prefactor;
    int power = 0;
    std::vector<std::pair<Target, int>> linear;  // (M, e) for (1 - M x)^e
    std::vector<std::pair<Poly, int>> other;     // factors not linear in x
  };
  View view() const;

  bool equals(const FactorCurrent& o) const { return x_ == o.x_ && s_ == o.s_; }
  std::string str() const { return s_.str(); }

 private:
  Var x_ = var::u;
  Scalar s_;
};

// A simple pole a of gamma(x)/x with its residue.
struct ResidueTerm {
  Target point;
  Scalar residue;
};

// gamma^+ - gamma^- = sum_k delta(a_k/x) Res_{x=a_k} gamma(x)/x.
std::vector<ResidueTerm> residues(const FactorCurrent& gamma);
Distribution expand_by_residues(const FactorCurrent& gamma);

struct Discrepancy {
  Pins pins;
  DMonomial dmon;
  Scalar lhs;
  Scalar rhs;
};

// Empty result means equal. Throws UnpinnedResidual on a linked pin.
std::vector<Discrepancy> canonicalize_compare(const Distribution& x, const Distribution& y);

}  // namespace iqg
