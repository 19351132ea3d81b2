#include "iqg/qtorus.hpp"

#include <cstdlib>
#include <sstream>

#include "iqg/error.hpp"

namespace iqg {

DMonomial shift_op(std::uint32_t node, std::uint32_t r, int e) { return DMonomial(var::W(node, r), e); }

Substitution conjugation(const DMonomial& d) {
  Substitution s;
  for (const auto& [w, e] : d.entries()) s.emplace(w, Target(Monomial{{var::Q, 2 * e}, {w, 1}}));
  return s;
}

Scalar conjugate_through(const DMonomial& d, const Scalar& s) {
  if (d.is_one()) return s;
  return s.substitute(conjugation(d));
}

Target conjugate_through(const DMonomial& d, const Target& t) {
  int qshift = 0;
  for (const auto& [w, e] : d.entries()) qshift += 2 * e * t.mono.degree(w);
  if (qshift == 0) return t;
  return {t.coeff, t.mono * Monomial(var::Q, qshift)};
}

std::string dmon_str(const DMonomial& d) {
  if (d.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, e] : d.entries()) {
    if (!first) os << "*";
    first = false;
    os << "D[" << var::node(w) << "," << var::index(w) << "]";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

TorusElement::TorusElement(const Scalar& s) { add_term(DMonomial(), s); }

TorusElement::TorusElement(const Scalar& s, const DMonomial& d) { add_term(d, s); }

void TorusElement::add_term(const DMonomial& d, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = t_.find(d);
  if (it == t_.end()) {
    t_.emplace(d, s);
    return;
  }
  it->second += s;
  if (it->second.is_zero()) t_.erase(it);
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  for (const auto& [d, s] : o.t_) add_term(d, s);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  for (const auto& [d, s] : o.t_) add_term(d, -s);
  return *this;
}

TorusElement TorusElement::operator*(const TorusElement& o) const {
  TorusElement r;
  for (const auto& [d1, s1] : t_) {
    for (const auto& [d2, s2] : o.t_) r.add_term(d1 * d2, s1 * conjugate_through(d1, s2));
  }
  return r;
}

TorusElement operator*(const Scalar& s, const TorusElement& x) {
  TorusElement r;
  for (const auto& [d, c] : x.t_) r.add_term(d, s * c);
  return r;
}

bool TorusElement::equals(const TorusElement& o) const {
  auto diff = *this - o;
  return diff.is_zero();
}

std::string TorusElement::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, s] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << s.str() << "]";
    if (!d.is_one()) os << "*" << dmon_str(d);
  }
  return os.str();
}

bool admissible_factor(const Poly& f, const NodePairs& partners) {
  bool only_q = true;
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [v, e] : m.entries()) {
      if (var::kind(v) != VarKind::Q) only_q = false;
    }
  }
  if (only_q) return true;
  if (f.size() != 2) return false;
  const auto& [m, c] = f.max_term();
  if (!(c == GaussRational(1) || c == GaussRational(-1))) return false;
  std::vector<Monomial::Entry> ws;
  for (const auto& [v, e] : m.entries()) {
    if (var::kind(v) == VarKind::Q) continue;
    if (var::kind(v) != VarKind::W) return false;
    ws.emplace_back(v, e);
  }
  if (ws.size() == 1) {
    int d = std::abs(ws[0].second);
    return d == 1 || d == 2 || d == 4;
  }
  if (ws.size() != 2) return false;
  int d1 = std::abs(ws[0].second), d2 = std::abs(ws[1].second);
  if (d1 != d2 || d1 > 2) return false;
  std::uint32_t n1 = var::node(ws[0].first), n2 = var::node(ws[1].first);
  if (n1 == n2) return true;
  for (const auto& [a, b] : partners) {
    if ((a == n1 && b == n2) || (a == n2 && b == n1)) return true;
  }
  return false;
}

void check_admissible(const Scalar& s, const NodePairs& partners) {
  for (const auto& [f, e] : s.factors()) {
    if (e < 0 && !admissible_factor(f, partners)) {
      throw Error(ErrorKind::LocalizationViolation, "denominator factor (" + f.str() + ") is not invertible");
    }
  }
}

void check_admissible(const TorusElement& x, const NodePairs& partners) {
  for (const auto& [d, s] : x.terms()) check_admissible(s, partners);
}

}  // namespace iqg
