#include "iqg/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "iqg/error.hpp"

namespace iqg {

int Target::compare(const Target& a, const Target& b) {
  int c = Monomial::compare(a.mono, b.mono);
  return c != 0 ? c : a.coeff.compare(b.coeff);
}

std::string Target::str() const {
  if (coeff.is_one()) return mono.str();
  if (mono.is_one()) return coeff.str();
  return coeff.str() + "*" + mono.str();
}

Poly::Poly(GaussRational c) {
  if (!c.is_zero()) t_.emplace_back(Monomial(), std::move(c));
}

Poly::Poly(const Monomial& m, GaussRational c) {
  if (!c.is_zero()) t_.emplace_back(m, std::move(c));
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  Poly p;
  for (auto& [m, c] : terms) {
    if (!p.t_.empty() && p.t_.back().first == m) {
      p.t_.back().second += c;
      if (p.t_.back().second.is_zero()) p.t_.pop_back();
    } else if (!c.is_zero()) {
      p.t_.emplace_back(std::move(m), std::move(c));
    }
  }
  return p;
}

GaussRational Poly::constant_term() const {
  for (const auto& [m, c] : t_) {
    if (m.is_one()) return c;
  }
  return {};
}

bool Poly::depends_on(Var v) const {
  return std::any_of(t_.begin(), t_.end(), [v](const Term& t) { return t.first.degree(v) != 0; });
}

bool Poly::contains_kind(VarKind k) const {
  return std::any_of(t_.begin(), t_.end(), [k](const Term& t) { return t.first.contains_kind(k); });
}

int Poly::max_degree(Var v) const {
  int d = 0;
  bool first = true;
  for (const auto& t : t_) {
    int e = t.first.degree(v);
    if (first || e > d) d = e;
    first = false;
  }
  return d;
}

int Poly::min_degree(Var v) const {
  int d = 0;
  bool first = true;
  for (const auto& t : t_) {
    int e = t.first.degree(v);
    if (first || e < d) d = e;
    first = false;
  }
  return d;
}

Poly Poly::degree_part(Var x, int d) const {
  std::vector<Term> out;
  for (const auto& [m, c] : t_) {
    if (m.degree(x) == d) out.emplace_back(m.without(x), c);
  }
  return from_terms(std::move(out));
}

std::map<int, Poly> Poly::by_degree(Var x) const {
  std::map<int, std::vector<Term>> parts;
  for (const auto& [m, c] : t_) parts[m.degree(x)].emplace_back(m.without(x), c);
  std::map<int, Poly> out;
  for (auto& [d, terms] : parts) out.emplace(d, from_terms(std::move(terms)));
  return out;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.t_) t.second = -t.second;
  return p;
}

namespace {

template <typename Combine>
std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, Combine sign) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = Monomial::compare(a[i].first, b[j].first);
    if (c == 0) {
      GaussRational s = a[i].second;
      if (sign) s -= b[j].second; else s += b[j].second;
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    } else if (c < 0) {
      out.push_back(a[i++]);
    } else {
      out.emplace_back(b[j].first, sign ? -b[j].second : b[j].second);
      ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  for (; j < b.size(); ++j) out.emplace_back(b[j].first, sign ? -b[j].second : b[j].second);
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.t_.empty()) return *this;
  if (t_.empty()) return *this = o;
  t_ = merge(t_, o.t_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.t_.empty()) return *this;
  t_ = merge(t_, o.t_, true);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  if (t_.empty() || o.t_.empty()) return {};
  if (o.t_.size() == 1) return scaled(o.t_[0].second, o.t_[0].first);
  if (t_.size() == 1) return o.scaled(t_[0].second, t_[0].first);
  std::unordered_map<Monomial, GaussRational, MonomialHash> acc;
  acc.reserve(t_.size() * o.t_.size());
  for (const auto& [ma, ca] : t_) {
    for (const auto& [mb, cb] : o.t_) {
      auto [it, inserted] = acc.try_emplace(ma * mb);
      if (inserted) it->second = ca * cb; else it->second += ca * cb;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.emplace_back(m, std::move(c));
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  Poly p;
  p.t_ = std::move(terms);
  return p;
}

Poly Poly::scaled(const GaussRational& c, const Monomial& m) const {
  if (c.is_zero()) return {};
  Poly p;
  p.t_.reserve(t_.size());
  // Multiplying by a monomial preserves the order.
  for (const auto& [mm, cc] : t_) p.t_.emplace_back(mm * m, cc * c);
  return p;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::optional<Poly> Poly::divide_binomial(const Poly& b) const {
  if (b.size() != 2) throw Error(ErrorKind::DivisionByZero, "divide_binomial needs a two-term divisor");
  if (is_zero()) return Poly();
  const Monomial ratio = b.t_[1].first / b.t_[0].first;
  Var y = ratio.entries().front().first;
  int dlo = b.t_[0].first.degree(y), dhi = b.t_[1].first.degree(y);
  const Term* top = &b.t_[1];
  const Term* bottom = &b.t_[0];
  if (dlo > dhi) {
    std::swap(dlo, dhi);
    std::swap(top, bottom);
  }
  const int span = dhi - dlo;
  const GaussRational top_inv = top->second.inverse();
  const Monomial top_mono_inv = top->first.inverse();
  Poly rem = *this;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    int hi = rem.max_degree(y), lo = rem.min_degree(y);
    if (hi - lo < span) return std::nullopt;
    Poly lead;
    {
      std::vector<Term> lt;
      for (const auto& t : rem.t_) {
        if (t.first.degree(y) == hi) lt.push_back(t);
      }
      lead.t_ = std::move(lt);
    }
    Poly q = lead.scaled(top_inv, top_mono_inv);
    for (const auto& t : q.t_) quotient.push_back(t);
    rem -= q * b;
  }
  return from_terms(std::move(quotient));
}

Poly Poly::substitute(const Substitution& s) const {
  if (s.empty()) return *this;
  std::map<std::pair<Var, int>, Target> cache;
  std::vector<Term> out;
  out.reserve(t_.size());
  for (const auto& [m, c] : t_) {
    GaussRational coeff = c;
    std::vector<Monomial::Entry> entries;
    Monomial extra;
    for (const auto& [v, e] : m.entries()) {
      auto it = s.find(v);
      if (it == s.end()) {
        entries.emplace_back(v, e);
        continue;
      }
      auto key = std::make_pair(v, e);
      auto ct = cache.find(key);
      if (ct == cache.end()) ct = cache.emplace(key, it->second.pow(e)).first;
      coeff *= ct->second.coeff;
      extra = extra * ct->second.mono;
    }
    out.emplace_back(Monomial::from_entries(std::move(entries)) * extra, std::move(coeff));
  }
  return from_terms(std::move(out));
}

GaussRational Poly::eval(const std::map<Var, GaussRational>& values) const {
  std::map<std::pair<Var, int>, GaussRational> cache;
  GaussRational sum;
  for (const auto& [m, c] : t_) {
    GaussRational term = c;
    for (const auto& [v, e] : m.entries()) {
      auto key = std::make_pair(v, e);
      auto ct = cache.find(key);
      if (ct == cache.end()) {
        auto it = values.find(v);
        if (it == values.end()) throw Error(ErrorKind::BadSpecialization, "no value for " + var::name(v));
        ct = cache.emplace(key, it->second.pow(e)).first;
      }
      term *= ct->second;
    }
    sum += term;
  }
  return sum;
}

int Poly::compare(const Poly& a, const Poly& b) {
  std::size_t n = std::min(a.t_.size(), b.t_.size());
  for (std::size_t k = 0; k < n; ++k) {
    int c = Monomial::compare(a.t_[k].first, b.t_[k].first);
    if (c != 0) return c;
    c = a.t_[k].second.compare(b.t_[k].second);
    if (c != 0) return c;
  }
  if (a.t_.size() == b.t_.size()) return 0;
  return a.t_.size() < b.t_.size() ? -1 : 1;
}

std::size_t Poly::hash() const {
  std::size_t h = 0x84222325cbf29ce4ULL;
  for (const auto& [m, c] : t_) h = (h ^ m.hash()) * 1099511628211ULL ^ c.hash();
  return h;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    if (!first) os << " + ";
    first = false;
    if (m.is_one()) {
      os << c.str();
    } else if (c.is_one()) {
      os << m.str();
    } else {
      os << c.str() << "*" << m.str();
    }
  }
  return os.str();
}

}  // namespace iqg
