#include "iqg/monomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace iqg {

namespace var {

std::string name(Var v) {
  switch (kind(v)) {
    case VarKind::Q: return "q";
    case VarKind::Spectral: {
      static const char* names[] = {"u", "v", "u1", "u2", "x"};
      std::uint32_t k = index(v);
      return k < 5 ? names[k] : "s" + std::to_string(k);
    }
    case VarKind::W: return "w[" + std::to_string(node(v)) + "," + std::to_string(index(v)) + "]";
    case VarKind::Z: return "z[" + std::to_string(node(v)) + "," + std::to_string(index(v)) + "]";
    case VarKind::Zeta: return "zeta[" + std::to_string(node(v)) + "]";
  }
  return "?";
}

}  // namespace var

Monomial::Monomial(Var v, int e) {
  if (e != 0) e_.emplace_back(v, e);
}

Monomial::Monomial(std::initializer_list<Entry> entries) : e_(entries) {
  *this = from_entries(std::move(e_));
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : entries) {
    if (!m.e_.empty() && m.e_.back().first == v) {
      m.e_.back().second += e;
      if (m.e_.back().second == 0) m.e_.pop_back();
    } else if (e != 0) {
      m.e_.emplace_back(v, e);
    }
  }
  return m;
}

int Monomial::degree(Var v) const {
  for (const auto& [w, e] : e_) {
    if (w == v) return e;
    if (w > v) break;
  }
  return 0;
}

Monomial Monomial::without(Var v) const {
  Monomial m;
  m.e_.reserve(e_.size());
  for (const auto& entry : e_) {
    if (entry.first != v) m.e_.push_back(entry);
  }
  return m;
}

bool Monomial::contains_kind(VarKind k) const {
  return std::any_of(e_.begin(), e_.end(), [k](const Entry& en) { return var::kind(en.first) == k; });
}

bool Monomial::all_even() const {
  return std::all_of(e_.begin(), e_.end(), [](const Entry& en) { return en.second % 2 == 0; });
}

Monomial Monomial::half() const {
  Monomial m;
  m.e_.reserve(e_.size());
  for (const auto& [v, e] : e_) m.e_.emplace_back(v, e / 2);
  return m;
}

Monomial Monomial::inverse() const {
  Monomial m;
  m.e_.reserve(e_.size());
  for (const auto& [v, e] : e_) m.e_.emplace_back(v, -e);
  return m;
}

Monomial Monomial::pow(int k) const {
  if (k == 0) return {};
  Monomial m;
  m.e_.reserve(e_.size());
  for (const auto& [v, e] : e_) m.e_.emplace_back(v, e * k);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  m.e_.reserve(e_.size() + o.e_.size());
  std::size_t i = 0, j = 0;
  while (i < e_.size() && j < o.e_.size()) {
    if (e_[i].first == o.e_[j].first) {
      int s = e_[i].second + o.e_[j].second;
      if (s != 0) m.e_.emplace_back(e_[i].first, s);
      ++i;
      ++j;
    } else if (e_[i].first < o.e_[j].first) {
      m.e_.push_back(e_[i++]);
    } else {
      m.e_.push_back(o.e_[j++]);
    }
  }
  while (i < e_.size()) m.e_.push_back(e_[i++]);
  while (j < o.e_.size()) m.e_.push_back(o.e_[j++]);
  return m;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  std::size_t i = 0, j = 0;
  constexpr Var kEnd = std::numeric_limits<Var>::max();
  while (i < a.e_.size() || j < b.e_.size()) {
    Var va = i < a.e_.size() ? a.e_[i].first : kEnd;
    Var vb = j < b.e_.size() ? b.e_[j].first : kEnd;
    if (va == vb) {
      if (a.e_[i].second != b.e_[j].second) return a.e_[i].second < b.e_[j].second ? -1 : 1;
      ++i;
      ++j;
    } else if (va < vb) {
      return a.e_[i].second < 0 ? -1 : 1;
    } else {
      return b.e_[j].second > 0 ? -1 : 1;
    }
  }
  return 0;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& [v, e] : e_) {
    h = (h ^ v) * 1099511628211ULL;
    h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(e))) * 1099511628211ULL;
  }
  return h;
}

namespace {

// Q and W are square roots, so their exponents print as halves.
std::string power_str(Var v, int e) {
  bool half_unit = var::kind(v) == VarKind::Q || var::kind(v) == VarKind::W;
  std::string base = var::name(v);
  if (half_unit) {
    if (e == 2) return base;
    if (e % 2 == 0) return base + "^" + std::to_string(e / 2);
    return base + "^(" + std::to_string(e) + "/2)";
  }
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

}  // namespace

std::string Monomial::str() const {
  if (e_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : e_) {
    if (!first) os << "*";
    first = false;
    os << power_str(v, e);
  }
  return os.str();
}

}  // namespace iqg
