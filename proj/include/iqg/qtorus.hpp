#pragma once

#include <map>
#include <string>
#include <vector>

#include "iqg/scalar.hpp"

namespace iqg {

// Exponents of the shift operators d_{i,r}, keyed by the matching W variable.
using DMonomial = Monomial;

DMonomial shift_op(std::uint32_t node, std::uint32_t r, int e = 1);

// Substitution realizing d * s = conj(s) * d: W_{i,r} -> Q^{2e} W_{i,r}.
Substitution conjugation(const DMonomial& d);
Scalar conjugate_through(const DMonomial& d, const Scalar& s);
Target conjugate_through(const DMonomial& d, const Target& t);

std::string dmon_str(const DMonomial& d);

// Sum of coefficient * shift-monomial, coefficients on the left.
class TorusElement {
 public:
  TorusElement() = default;
  TorusElement(const Scalar& s);  // NOLINT(google-explicit-constructor)
  TorusElement(const Scalar& s, const DMonomial& d);

  const std::map<DMonomial, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  TorusElement operator*(const TorusElement& o) const;
  // Left multiplication by a scalar.
  friend TorusElement operator*(const Scalar& s, const TorusElement& x);

  bool equals(const TorusElement& o) const;
  friend bool operator==(const TorusElement& a, const TorusElement& b) { return a.equals(b); }
  friend bool operator!=(const TorusElement& a, const TorusElement& b) { return !a.equals(b); }

  std::string str() const;

 private:
  void add_term(const DMonomial& d, const Scalar& s);
  std::map<DMonomial, Scalar> t_;
};

// Pairs {i, tau i} whose W variables may be mixed in one denominator factor.
using NodePairs = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Throws LocalizationViolation naming the offending factor.
void check_admissible(const Scalar& s, const NodePairs& partners);
void check_admissible(const TorusElement& x, const NodePairs& partners);
bool admissible_factor(const Poly& f, const NodePairs& partners);

}  // namespace iqg
