#include "iqg/scalar.hpp"

#include <algorithm>
#include <sstream>

#include "iqg/error.hpp"

namespace iqg {

namespace {

void split_binomial(const Poly& f, std::vector<Scalar::Factor>& out) {
  const auto& [m, c] = f.max_term();
  GaussRational s;
  if (m.all_even() && (-c).rational_sqrt(s)) {
    Monomial n = m.half();
    split_binomial(Poly(1) + Poly(n, -s), out);
    split_binomial(Poly(1) + Poly(n, s), out);
    return;
  }
  out.emplace_back(f, 1);
}

}  // namespace

void Scalar::canonicalize(const Poly& p, Target& unit, std::vector<Factor>& factors) {
  if (p.is_zero()) throw Error(ErrorKind::DivisionByZero, "canonical form of zero");
  const auto& [m, c] = p.min_term();
  unit = Target(c, m);
  if (p.size() == 1) return;
  Poly f = p.scaled(unit.inverse());
  if (f.size() == 2) {
    split_binomial(f, factors);
  } else {
    factors.emplace_back(std::move(f), 1);
  }
}

Scalar::Scalar(const Poly& p) : num_(p) { absorb_num(); }

Scalar Scalar::binomial(const GaussRational& c, const Monomial& m) { return Scalar(Poly(1) + Poly(m, c)); }

void Scalar::add_factor(const Poly& f, int e) {
  if (e == 0) return;
  auto it = std::lower_bound(f_.begin(), f_.end(), f, [](const Factor& a, const Poly& b) { return a.first < b; });
  if (it != f_.end() && it->first == f) {
    it->second += e;
    if (it->second == 0) f_.erase(it);
  } else {
    f_.insert(it, Factor(f, e));
  }
}

void Scalar::absorb_num() {
  if (num_.is_zero()) {
    f_.clear();
    return;
  }
  if (num_.size() != 2) return;
  Target unit;
  std::vector<Factor> fs;
  canonicalize(num_, unit, fs);
  num_ = Poly(unit);
  for (const auto& [f, e] : fs) add_factor(f, e);
}

bool Scalar::depends_on(Var v) const {
  if (num_.depends_on(v)) return true;
  return std::any_of(f_.begin(), f_.end(), [v](const Factor& f) { return f.first.depends_on(v); });
}

bool Scalar::contains_kind(VarKind k) const {
  if (num_.contains_kind(k)) return true;
  return std::any_of(f_.begin(), f_.end(), [k](const Factor& f) { return f.first.contains_kind(k); });
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (f_ == o.f_) {
    num_ += o.num_;
    absorb_num();
    return *this;
  }
  std::vector<Factor> common;
  Poly xm(1), ym(1);
  std::size_t i = 0, j = 0;
  while (i < f_.size() || j < o.f_.size()) {
    int c;
    if (i == f_.size()) {
      c = 1;
    } else if (j == o.f_.size()) {
      c = -1;
    } else {
      c = Poly::compare(f_[i].first, o.f_[j].first);
    }
    const Poly& f = c <= 0 ? f_[i].first : o.f_[j].first;
    int ex = c <= 0 ? f_[i].second : 0;
    int ey = c >= 0 ? o.f_[j].second : 0;
    int m = std::min(ex, ey);
    if (m != 0) common.emplace_back(f, m);
    if (ex > m) xm *= f.pow(static_cast<unsigned>(ex - m));
    if (ey > m) ym *= f.pow(static_cast<unsigned>(ey - m));
    if (c <= 0) ++i;
    if (c >= 0) ++j;
  }
  num_ = num_ * xm + o.num_ * ym;
  f_ = std::move(common);
  absorb_num();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  num_ = num_ * o.num_;
  for (const auto& [f, e] : o.f_) add_factor(f, e);
  absorb_num();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero scalar");
  Scalar r;
  Target unit;
  std::vector<Factor> fs;
  canonicalize(num_, unit, fs);
  r.num_ = Poly(unit.inverse());
  for (const auto& [f, e] : f_) r.add_factor(f, -e);
  for (const auto& [f, e] : fs) r.add_factor(f, -e);
  return r;
}

Scalar Scalar::pow(int e) const {
  if (e == 0) return Scalar(1);
  if (e < 0) return inverse().pow(-e);
  if (e == 1) return *this;
  Scalar r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  for (const auto& [f, k] : f_) r.f_.emplace_back(f, k * e);
  r.absorb_num();
  return r;
}

Scalar& Scalar::reduce() {
  if (num_.is_zero() || num_.is_monomial()) return *this;
  bool changed = false;
  for (auto& [f, e] : f_) {
    if (e >= 0) continue;
    if (f.size() == 2) {
      while (e < 0) {
        auto q = num_.divide_binomial(f);
        if (!q) break;
        num_ = std::move(*q);
        ++e;
        changed = true;
      }
    } else if (num_.size() == f.size()) {
      Target unit;
      std::vector<Factor> fs;
      canonicalize(num_, unit, fs);
      if (fs.size() == 1 && fs[0].first == f) {
        num_ = Poly(unit);
        ++e;
        changed = true;
      }
    }
    if (num_.is_monomial()) break;
  }
  if (changed) {
    f_.erase(std::remove_if(f_.begin(), f_.end(), [](const Factor& f) { return f.second == 0; }), f_.end());
    Poly n = std::move(num_);
    num_ = Poly(1);
    *this *= Scalar(n);
  }
  return *this;
}

Scalar Scalar::substitute(const Substitution& s) const {
  if (s.empty() || is_zero()) return *this;
  Scalar result(num_.substitute(s));
  bool zero = result.is_zero();
  for (const auto& [f, e] : f_) {
    Poly fp = f.substitute(s);
    if (fp.is_zero()) {
      if (e > 0) {
        zero = true;
        continue;
      }
      Scalar r = *this;
      r.reduce();
      bool cancelled = true;
      for (const auto& [g, k] : r.f_) {
        if (g == f && k < 0) cancelled = false;
      }
      if (cancelled) return r.substitute(s);
      throw Error(ErrorKind::DenominatorVanishes, "factor (" + f.str() + ") vanishes");
    }
    if (!zero) {
      Scalar fs(fp);
      result *= fs.pow(e);
    }
  }
  if (zero) return Scalar();
  return result;
}

GaussRational Scalar::eval(const std::map<Var, GaussRational>& values) const {
  GaussRational r = num_.eval(values);
  bool zero = r.is_zero();
  for (const auto& [f, e] : f_) {
    GaussRational fv = f.eval(values);
    if (fv.is_zero()) {
      if (e < 0) throw Error(ErrorKind::DenominatorVanishes, "factor (" + f.str() + ") vanishes at the point");
      zero = true;
      continue;
    }
    if (!zero) r *= fv.pow(e);
  }
  return zero ? GaussRational() : r;
}

bool Scalar::equals(const Scalar& o) const {
  if (same_form(o)) return true;
  return (*this - o).is_zero();
}

std::string Scalar::str() const {
  if (f_.empty()) return num_.str();
  std::ostringstream os;
  bool lead = !num_.is_one();
  if (lead) os << (num_.size() > 1 ? "(" + num_.str() + ")" : num_.str());
  for (const auto& [f, e] : f_) {
    if (lead) os << "*";
    lead = true;
    os << "(" << f.str() << ")";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace iqg
