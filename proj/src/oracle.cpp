#include "iqg/oracle.hpp"

#include <algorithm>
#include <functional>

#include "iqg/error.hpp"

namespace iqg {

namespace {

using Key = std::vector<std::pair<Var, GaussRational>>;

bool recoverable(const Error& e) {
  return e.kind() == ErrorKind::DenominatorVanishes || e.kind() == ErrorKind::BadSpecialization ||
         e.kind() == ErrorKind::DivisionByZero;
}

GaussRational eval_target(const Target& t, const Point& p) { return Poly(t).eval(p); }

void accumulate(Groups& g, Key key, std::size_t nf, std::size_t k, const GaussRational& value) {
  std::sort(key.begin(), key.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  auto& slot = g[key];
  if (slot.empty()) slot.assign(nf, GaussRational());
  slot[k] += value;
}

void collect_vars(const Poly& p, std::set<Var>& out) {
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.entries()) out.insert(v);
  }
}

std::set<Var> scalar_vars(const Scalar& s) {
  std::set<Var> out;
  collect_vars(s.num(), out);
  for (const auto& [f, e] : s.factors()) collect_vars(f, out);
  return out;
}

constexpr int kMaxRedraws = 200;

}  // namespace

GaussRational TestFunction::eval(const Point& p) const { return Poly(mono).eval(p); }

Point shift_point(const Point& p, const DMonomial& d) {
  if (d.is_one()) return p;
  Point r = p;
  const GaussRational& qh = p.at(var::Q);
  for (const auto& [w, e] : d.entries()) r[w] *= qh.pow(2L * e);
  return r;
}

GaussRational act(const TorusElement& x, const TestFunction& f, const Point& p) {
  GaussRational s;
  for (const auto& [d, c] : x.terms()) s += c.eval(p) * f.eval(shift_point(p, d));
  return s;
}

GaussRational act_product(const std::vector<TorusElement>& xs, const TestFunction& f, const Point& p) {
  std::function<GaussRational(std::size_t, const Point&)> go = [&](std::size_t k, const Point& at) {
    if (k == xs.size()) return f.eval(at);
    GaussRational s;
    for (const auto& [d, c] : xs[k].terms()) s += c.eval(at) * go(k + 1, shift_point(at, d));
    return s;
  };
  return go(0, p);
}

bool NumericKeyLess::operator()(const Key& a, const Key& b) const {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k].first != b[k].first) return a[k].first < b[k].first;
    int c = a[k].second.compare(b[k].second);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

Groups evaluate(const Distribution& x, const Point& p, const std::vector<TestFunction>& fs) {
  Groups g;
  for (const auto& [key, c] : x.terms()) {
    Point at = p;
    Key nk;
    for (const auto& [v, t] : key.pins) {
      GaussRational val = eval_target(t, p);
      nk.emplace_back(v, val);
      at[v] = val;
    }
    GaussRational cv = c.eval(at);
    Point shifted = shift_point(p, key.dmon);
    for (std::size_t k = 0; k < fs.size(); ++k) accumulate(g, nk, fs.size(), k, cv * fs[k].eval(shifted));
  }
  return g;
}

Groups evaluate(const GKLOImage& img, const WordSum& words, const Point& p, const std::vector<TestFunction>& fs) {
  Groups g;
  const Target qinv(Monomial(var::Q, -2));
  for (const auto& w : words) {
    // Depth-first over the blocks of every B letter; P is the point as seen
    // by the next letter (shifted by all shift operators to the left).
    std::function<void(std::size_t, const Point&, Point&, GaussRational)> go =
        [&](std::size_t k, const Point& P, Point& pins, GaussRational acc) {
          if (k == w.letters.size()) {
            Point at = p;
            for (const auto& [v, val] : pins) at[v] = val;
            GaussRational cv = w.coeff.eval(at) * acc;
            if (cv.is_zero()) return;
            Key nk(pins.begin(), pins.end());
            for (std::size_t t = 0; t < fs.size(); ++t) accumulate(g, nk, fs.size(), t, cv * fs[t].eval(P));
            return;
          }
          const Letter& L = w.letters[k];
          if (L.xi) {
            Point at = P;
            auto it = pins.find(L.var);
            at[L.var] = it != pins.end() ? it->second : p.at(L.var);
            FactorCurrent xi = img.Xi(L.node, L.var);
            go(k + 1, P, pins, acc * xi.scalar().eval(at));
            return;
          }
          for (const auto& b : img.blocks(L.node)) {
            GaussRational pin = eval_target(b.point * qinv, P);
            for (const auto& [d, c] : b.chi.terms()) {
              GaussRational cv = c.eval(P);
              if (cv.is_zero()) continue;
              Point next_pins = pins;
              next_pins[L.var] = pin;
              go(k + 1, shift_point(P, d), next_pins, acc * cv);
            }
          }
        };
    Point pins;
    go(0, p, pins, GaussRational(1));
  }
  return g;
}

bool groups_equal(const Groups& a, const Groups& b) {
  auto zero = [](const std::vector<GaussRational>& v) {
    return std::all_of(v.begin(), v.end(), [](const GaussRational& x) { return x.is_zero(); });
  };
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it == b.end()) {
      if (!zero(v)) return false;
    } else if (v != it->second) {
      return false;
    }
  }
  for (const auto& [k, v] : b) {
    if (a.find(k) == a.end() && !zero(v)) return false;
  }
  return true;
}

GaussRational Sampler::rational() {
  std::uniform_int_distribution<long> num(-64, 64), den(1, 64);
  long n = 0;
  while (n == 0) n = num(rng_);
  return GaussRational(n, den(rng_));
}

GaussRational Sampler::gaussian() {
  GaussRational im = rational();
  return rational() + GaussRational::i() * im;
}

Point Sampler::draw(const std::set<Var>& symbols) {
  Point p;
  for (Var v : symbols) {
    VarKind k = var::kind(v);
    p[v] = (k == VarKind::Z || k == VarKind::Zeta) ? gaussian() : rational();
  }
  return p;
}

std::vector<TestFunction> Sampler::test_functions(const std::set<Var>& wvars, int count) {
  std::vector<TestFunction> out{TestFunction{}};
  std::uniform_int_distribution<int> ex(-2, 2);
  for (int k = 1; k < count; ++k) {
    std::vector<Monomial::Entry> es;
    for (Var v : wvars) es.emplace_back(v, ex(rng_));
    out.push_back({Monomial::from_entries(std::move(es))});
  }
  return out;
}

std::set<Var> instance_symbols(const ShiftInstance& inst) {
  std::set<Var> s{var::Q, var::u, var::v, var::u1, var::u2};
  for (int i = 0; i < inst.rank(); ++i) {
    const auto node = static_cast<std::uint32_t>(i + 1);
    for (int r = 1; r <= inst.v[i]; ++r) s.insert(var::W(node, r));
    for (int t = 1; t <= inst.w[i]; ++t) s.insert(var::Z(node, t));
    if (!inst.zeta.count(i + 1)) s.insert(var::zeta(node));
  }
  return s;
}

namespace {

std::set<Var> w_only(const std::set<Var>& symbols) {
  std::set<Var> out;
  for (Var v : symbols) {
    if (var::kind(v) == VarKind::W) out.insert(v);
  }
  return out;
}

// Runs compare(point, fs) on `trials` good points, redrawing on vanishing
// denominators.
OracleVerdict run_trials(const std::set<Var>& symbols, int trials, std::uint64_t seed, bool symbolic_equal,
                         const std::function<bool(const Point&, const std::vector<TestFunction>&)>& compare) {
  OracleVerdict v;
  v.seed = seed;
  Sampler s(seed);
  const auto wv = w_only(symbols);
  bool equal = true;
  while (v.trials < trials) {
    Point p = s.draw(symbols);
    auto fs = s.test_functions(wv, 3);
    try {
      if (!compare(p, fs)) equal = false;
      ++v.trials;
    } catch (const Error& e) {
      if (!recoverable(e)) throw;
      if (++v.redraws > kMaxRedraws) throw Error(ErrorKind::BadSpecialization, "oracle could not find a generic point");
    }
    if (!equal) break;
  }
  v.ran = true;
  v.numeric_equal = equal;
  v.consistent = equal == symbolic_equal;
  return v;
}

}  // namespace

OracleVerdict randomized_equal(const Distribution& x, const Distribution& y, const std::set<Var>& symbols,
                               int trials, std::uint64_t seed, bool symbolic_equal) {
  return run_trials(symbols, trials, seed, symbolic_equal, [&](const Point& p, const std::vector<TestFunction>& fs) {
    return groups_equal(evaluate(x, p, fs), evaluate(y, p, fs));
  });
}

OracleVerdict randomized_relation(const GKLOImage& img, const WordSum& lhs, const WordSum* rhs_words,
                                  const Distribution& rhs, int trials, std::uint64_t seed, bool symbolic_equal) {
  auto symbols = instance_symbols(img.instance());
  return run_trials(symbols, trials, seed, symbolic_equal, [&](const Point& p, const std::vector<TestFunction>& fs) {
    Groups l = evaluate(img, lhs, p, fs);
    Groups r = rhs_words ? evaluate(img, *rhs_words, p, fs) : evaluate(rhs, p, fs);
    return groups_equal(l, r);
  });
}

OracleVerdict randomized_torus(const std::vector<TorusWord>& lhs, const std::vector<TorusWord>& rhs,
                               const std::set<Var>& symbols, int trials, std::uint64_t seed, bool symbolic_equal) {
  auto value = [](const std::vector<TorusWord>& ws, const TestFunction& f, const Point& p) {
    GaussRational s;
    for (const auto& w : ws) s += w.coeff.eval(p) * act_product(w.factors, f, p);
    return s;
  };
  return run_trials(symbols, trials, seed, symbolic_equal, [&](const Point& p, const std::vector<TestFunction>& fs) {
    for (const auto& f : fs) {
      if (value(lhs, f, p) != value(rhs, f, p)) return false;
    }
    return true;
  });
}

namespace {

// Truncated Laurent series: c[k] is the coefficient of t^(val + k).
struct Series {
  int val = 0;
  std::vector<GaussRational> c;
};

Series series_of(const std::map<int, GaussRational>& poly, bool at_infinity, std::size_t m) {
  std::map<int, GaussRational> in_t;
  for (const auto& [d, c] : poly) {
    if (!c.is_zero()) in_t[at_infinity ? -d : d] += c;
  }
  if (in_t.empty()) throw Error(ErrorKind::DenominatorVanishes, "factor vanishes identically at the point");
  Series s;
  s.val = in_t.begin()->first;
  s.c.assign(m, GaussRational());
  for (const auto& [d, c] : in_t) {
    auto k = static_cast<std::size_t>(d - s.val);
    if (k < m) s.c[k] = c;
  }
  return s;
}

Series mul(const Series& a, const Series& b) {
  Series r;
  r.val = a.val + b.val;
  const std::size_t m = a.c.size();
  r.c.assign(m, GaussRational());
  for (std::size_t i = 0; i < m; ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < m; ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

Series inv(const Series& a) {
  Series r;
  r.val = -a.val;
  const std::size_t m = a.c.size();
  r.c.assign(m, GaussRational());
  const GaussRational b0 = a.c[0].inverse();
  r.c[0] = b0;
  for (std::size_t k = 1; k < m; ++k) {
    GaussRational s;
    for (std::size_t j = 1; j <= k; ++j) s += a.c[j] * r.c[k - j];
    r.c[k] = -b0 * s;
  }
  return r;
}

std::map<int, GaussRational> numeric_laurent(const Poly& p, Var x, const Point& at) {
  std::map<int, GaussRational> out;
  for (const auto& [d, coeff] : p.by_degree(x)) out[d] = coeff.eval(at);
  return out;
}

// Coefficients of x^m, |m| <= order, of the expansion at infinity or zero.
std::map<int, GaussRational> expand(const Scalar& s, Var x, const Point& at, bool at_infinity, int order) {
  std::vector<std::pair<std::map<int, GaussRational>, int>> parts;
  parts.emplace_back(numeric_laurent(s.num(), x, at), 1);
  for (const auto& [f, e] : s.factors()) parts.emplace_back(numeric_laurent(f, x, at), e);
  // Total valuation in t decides how many terms each factor needs.
  int total = 0;
  for (const auto& [poly, e] : parts) total += e * series_of(poly, at_infinity, 1).val;
  const int m = std::max(order - total + 1, 1);
  Series acc{0, std::vector<GaussRational>(static_cast<std::size_t>(m))};
  acc.c[0] = 1;
  for (const auto& [poly, e] : parts) {
    Series f = series_of(poly, at_infinity, static_cast<std::size_t>(m));
    if (e < 0) f = inv(f);
    for (int k = 0; k < std::abs(e); ++k) acc = mul(acc, f);
  }
  std::map<int, GaussRational> out;
  for (std::size_t k = 0; k < acc.c.size(); ++k) {
    int t = acc.val + static_cast<int>(k);
    if (t < -order || t > order) continue;
    out[at_infinity ? -t : t] = acc.c[k];
  }
  return out;
}

}  // namespace

bool truncated_series_check(const FactorCurrent& gamma, const Distribution& expansion, int order, std::uint64_t seed,
                            int points) {
  const Var x = gamma.var();
  std::set<Var> symbols = scalar_vars(gamma.scalar());
  for (const auto& [k, c] : expansion.terms()) {
    for (Var v : scalar_vars(c)) symbols.insert(v);
    for (const auto& [v, t] : k.pins) collect_vars(Poly(t), symbols);
  }
  symbols.erase(x);
  Sampler s(seed);
  int done = 0, redraws = 0;
  while (done < points) {
    Point at = s.draw(symbols);
    try {
      auto plus = expand(gamma.scalar(), x, at, true, order);
      auto minus = expand(gamma.scalar(), x, at, false, order);
      std::vector<std::pair<GaussRational, GaussRational>> deltas;
      for (const auto& [k, c] : expansion.terms()) {
        deltas.emplace_back(eval_target(k.pins.front().second, at), c.eval(at));
      }
      for (int m = -order; m <= order; ++m) {
        GaussRational lhs = plus[m] - minus[m];
        GaussRational rhs;
        for (const auto& [a, r] : deltas) rhs += r * a.pow(-m);
        if (lhs != rhs) return false;
      }
      ++done;
    } catch (const Error& e) {
      if (!recoverable(e) || ++redraws > kMaxRedraws) throw;
    }
  }
  return true;
}

}  // namespace iqg
