#include "iqg/deltacalc.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "iqg/error.hpp"

namespace iqg {

int compare_pins(const Pins& a, const Pins& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k].first != b[k].first) return a[k].first < b[k].first ? -1 : 1;
    int c = Target::compare(a[k].second, b[k].second);
    if (c != 0) return c;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

std::string pins_str(const Pins& p) {
  if (p.empty()) return "{}";
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) os << ", ";
    os << var::name(p[k].first) << "=" << p[k].second.str();
  }
  os << "}";
  return os.str();
}

Substitution pin_substitution(const Pins& p) {
  Substitution s;
  for (const auto& [v, t] : p) s.emplace(v, t);
  return s;
}

namespace {

bool mentions_spectral(const Target& t) { return t.mono.contains_kind(VarKind::Spectral); }

Target substitute_target(const Target& t, const Substitution& s) {
  Poly p = Poly(t).substitute(s);
  if (!p.is_monomial()) throw Error(ErrorKind::DoublePin, "pin target did not stay a monomial");
  return {p.min_term().second, p.min_term().first};
}

void sort_pins(Pins& p) {
  std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t k = 1; k < p.size(); ++k) {
    if (p[k].first == p[k - 1].first) {
      throw Error(ErrorKind::DoublePin, var::name(p[k].first) + " pinned twice");
    }
  }
}

// Replaces pinned spectral variables inside other pin targets.
void resolve_links(Pins& p) {
  for (std::size_t round = 0; round <= p.size(); ++round) {
    bool changed = false;
    for (auto& [v, t] : p) {
      if (!mentions_spectral(t)) continue;
      Substitution s;
      for (const auto& [w, tw] : p) {
        if (w != v && t.mono.degree(w) != 0) s.emplace(w, tw);
      }
      if (t.mono.degree(v) != 0) throw Error(ErrorKind::DoublePin, var::name(v) + " pinned to itself");
      if (!s.empty()) {
        t = substitute_target(t, s);
        changed = true;
      }
    }
    if (!changed) return;
  }
  throw Error(ErrorKind::DoublePin, "cyclic linked pins");
}

}  // namespace

bool has_linked_pin(const Pins& p) {
  return std::any_of(p.begin(), p.end(), [](const auto& e) { return mentions_spectral(e.second); });
}

Distribution Distribution::pinned(Var v, const Target& target, const Scalar& coeff, const DMonomial& dmon) {
  DistTerm t{{}, coeff, dmon};
  return Distribution(pin_substitute(t, v, target));
}

Distribution Distribution::scalar(const Scalar& coeff, const DMonomial& dmon) {
  return Distribution(DistTerm{{}, coeff, dmon});
}

std::vector<DistTerm> Distribution::term_list() const {
  std::vector<DistTerm> out;
  out.reserve(t_.size());
  for (const auto& [k, c] : t_) out.push_back({k.pins, c, k.dmon});
  return out;
}

void Distribution::add(const DistTerm& t) {
  if (t.coeff.is_zero()) return;
  DistKey key{t.pins, t.dmon};
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_.emplace(std::move(key), t.coeff);
    return;
  }
  it->second += t.coeff;
  if (it->second.is_zero()) t_.erase(it);
}

Distribution& Distribution::operator+=(const Distribution& o) {
  for (const auto& [k, c] : o.t_) add({k.pins, c, k.dmon});
  return *this;
}

Distribution& Distribution::operator-=(const Distribution& o) {
  for (const auto& [k, c] : o.t_) add({k.pins, -c, k.dmon});
  return *this;
}

std::string Distribution::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << "\n";
    first = false;
    os << "delta" << pins_str(k.pins) << " [" << c.str() << "]";
    if (!k.dmon.is_one()) os << " " << dmon_str(k.dmon);
  }
  return os.str();
}

DistTerm pin_substitute(const DistTerm& t, Var v, const Target& target) {
  DistTerm r = t;
  if (target.mono.degree(v) != 0) throw Error(ErrorKind::DoublePin, var::name(v) + " pinned to itself");
  r.pins.emplace_back(v, target);
  sort_pins(r.pins);
  resolve_links(r.pins);
  r.coeff = r.coeff.substitute(pin_substitution(r.pins));
  return r;
}

Distribution multiply_dist(const Distribution& x, const Distribution& y) {
  Distribution out;
  if (x.is_zero() || y.is_zero()) return out;
  auto ys = y.term_list();
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& ty : ys) {
      DistTerm t;
      t.pins = kx.pins;
      for (const auto& [v, target] : ty.pins) t.pins.emplace_back(v, conjugate_through(kx.dmon, target));
      sort_pins(t.pins);
      resolve_links(t.pins);
      Substitution s = pin_substitution(t.pins);
      Scalar cy = conjugate_through(kx.dmon, ty.coeff);
      t.coeff = cx.substitute(s);
      if (t.coeff.is_zero()) continue;
      t.coeff *= cy.substitute(s);
      t.dmon = kx.dmon * ty.dmon;
      out.add(t);
    }
  }
  return out;
}

Distribution scale(const Scalar& s, const Distribution& x) {
  Distribution out;
  if (s.is_zero()) return out;
  for (const auto& [k, c] : x.terms()) {
    Scalar f = s.substitute(pin_substitution(k.pins));
    out.add({k.pins, f * c, k.dmon});
  }
  return out;
}

Distribution bracket_q(const Distribution& x, const Distribution& y, const Scalar& vparam) {
  Distribution r = multiply_dist(x, y);
  if (vparam.is_zero()) return r;
  r -= scale(vparam, multiply_dist(y, x));
  return r;
}

Distribution swap_vars(const Distribution& x, Var a, Var b) {
  Substitution sw{{a, Target(Monomial(b))}, {b, Target(Monomial(a))}};
  Distribution out;
  for (const auto& [k, c] : x.terms()) {
    DistTerm t;
    for (const auto& [v, target] : k.pins) {
      Var nv = v == a ? b : (v == b ? a : v);
      t.pins.emplace_back(nv, substitute_target(target, sw));
    }
    sort_pins(t.pins);
    t.coeff = c.substitute(sw);
    t.dmon = k.dmon;
    out.add(t);
  }
  return out;
}

Distribution symmetrize(const Distribution& x, Var a, Var b) { return x + swap_vars(x, a, b); }

FactorCurrent FactorCurrent::inverted() const {
  return {x_, s_.substitute(x_, Target(Monomial(x_, -1)))};
}

int FactorCurrent::top_degree() const {
  int d = s_.num().max_degree(x_);
  for (const auto& [f, e] : s_.factors()) d += e * f.max_degree(x_);
  return d;
}

Scalar FactorCurrent::leading_coefficient() const {
  if (s_.is_zero()) return {};
  Scalar c(s_.num().degree_part(x_, s_.num().max_degree(x_)));
  for (const auto& [f, e] : s_.factors()) {
    if (!f.depends_on(x_)) {
      c *= Scalar(f).pow(e);
    } else {
      c *= Scalar(f.degree_part(x_, f.max_degree(x_))).pow(e);
    }
  }
  return c;
}

FactorCurrent::View FactorCurrent::view() const {
  View v;
  const Poly& num = s_.num();
  if (num.is_monomial()) {
    const auto& [m, c] = num.min_term();
    v.power = m.degree(x_);
    v.prefactor = Scalar(m.without(x_), c);
  } else if (!num.depends_on(x_)) {
    v.prefactor = Scalar(num);
  } else {
    v.prefactor = Scalar(1);
    v.other.emplace_back(num, 1);
  }
  std::map<Monomial, std::pair<GaussRational, int>> lin;
  for (const auto& [f, e] : s_.factors()) {
    if (!f.depends_on(x_)) {
      v.prefactor *= Scalar(f).pow(e);
      continue;
    }
    if (f.size() == 2 && f.min_term().first.is_one()) {
      const auto& [m, c] = f.max_term();
      int d = m.degree(x_);
      Monomial rest = m.without(x_);
      if (d == 1) {
        auto& slot = lin[rest];
        slot.first = -c;
        slot.second += e;
        continue;
      }
      if (d == -1) {
        v.prefactor *= Scalar(rest, c).pow(e);
        v.power -= e;
        auto& slot = lin[rest.inverse()];
        slot.first = -c.inverse();
        slot.second += e;
        continue;
      }
    }
    v.other.emplace_back(f, e);
  }
  for (const auto& [m, ce] : lin) {
    if (ce.second != 0) v.linear.emplace_back(Target(ce.first, m), ce.second);
  }
  return v;
}

std::vector<ResidueTerm> residues(const FactorCurrent& gamma) {
  const Var x = gamma.var();
  Scalar s = gamma.scalar();
  s.reduce();
  std::vector<ResidueTerm> out;
  for (const auto& [f, e] : s.factors()) {
    if (e >= 0 || !f.depends_on(x)) continue;
    int d = 0;
    bool linear = f.size() == 2 && f.min_term().first.is_one();
    if (linear) {
      d = f.max_term().first.degree(x);
      linear = d == 1 || d == -1;
    }
    if (!linear) throw Error(ErrorKind::NonSimplePole, "pole factor (" + f.str() + ") is not linear in " + var::name(x));
    if (e < -1) throw Error(ErrorKind::NonSimplePole, "pole of order " + std::to_string(-e) + " at (" + f.str() + ")");
    const auto& [m, c] = f.max_term();
    Target root(-c.inverse(), m.without(x).inverse());
    if (d == -1) root = root.inverse();
    Scalar h = s * Scalar(f);
    Scalar value = h.substitute(x, root);
    if (d == 1) value = -value;
    out.push_back({root, value});
  }
  return out;
}

Distribution expand_by_residues(const FactorCurrent& gamma) {
  Distribution out;
  for (const auto& r : residues(gamma)) out.add({{{gamma.var(), r.point}}, r.residue, {}});
  return out;
}

std::vector<Discrepancy> canonicalize_compare(const Distribution& x, const Distribution& y) {
  std::set<DistKey> keys;
  for (const auto& [k, c] : x.terms()) keys.insert(k);
  for (const auto& [k, c] : y.terms()) keys.insert(k);
  std::vector<Discrepancy> out;
  for (const auto& k : keys) {
    if (has_linked_pin(k.pins)) {
      throw Error(ErrorKind::UnpinnedResidual, "linked pin " + pins_str(k.pins) + " in comparison");
    }
    auto ix = x.terms().find(k);
    auto iy = y.terms().find(k);
    Scalar lx = ix == x.terms().end() ? Scalar() : ix->second;
    Scalar ly = iy == y.terms().end() ? Scalar() : iy->second;
    if (lx != ly) out.push_back({k.pins, k.dmon, lx, ly});
  }
  return out;
}

}  // namespace iqg
