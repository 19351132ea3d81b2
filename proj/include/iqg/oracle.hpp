#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "iqg/igklo.hpp"
#include "iqg/relcheck.hpp"

namespace iqg {

using Point = std::map<Var, GaussRational>;

// Laurent monomial in the W variables.
struct TestFunction {
  Monomial mono;
  GaussRational eval(const Point& p) const;
};

// W_{i,r} -> Q^{2e} W_{i,r} at a numeric point.
Point shift_point(const Point& p, const DMonomial& d);

// (x f)(p) for a torus element acting by difference operators.
GaussRational act(const TorusElement& x, const TestFunction& f, const Point& p);
// (x_1 (x_2 (... (x_n f)))) (p), composing the actions one at a time.
GaussRational act_product(const std::vector<TorusElement>& xs, const TestFunction& f, const Point& p);

struct NumericKeyLess {
  bool operator()(const std::vector<std::pair<Var, GaussRational>>& a,
                  const std::vector<std::pair<Var, GaussRational>>& b) const;
};
// Numeric pin values -> one value per test function.
using Groups = std::map<std::vector<std::pair<Var, GaussRational>>, std::vector<GaussRational>, NumericKeyLess>;

Groups evaluate(const Distribution& x, const Point& p, const std::vector<TestFunction>& fs);
Groups evaluate(const GKLOImage& img, const WordSum& w, const Point& p, const std::vector<TestFunction>& fs);
bool groups_equal(const Groups& a, const Groups& b);

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  GaussRational rational();
  GaussRational gaussian();
  // Q, W and spectral variables get rationals; Z and zeta get Gaussian values.
  Point draw(const std::set<Var>& symbols);
  std::vector<TestFunction> test_functions(const std::set<Var>& wvars, int count);

 private:
  std::mt19937_64 rng_;
};

// All symbols an instance can produce, plus the free spectral variables.
std::set<Var> instance_symbols(const ShiftInstance& inst);

// Randomized comparison. Each trial draws a point and test functions and
// compares group by group; a trial whose evaluation hits a vanishing
// denominator is redrawn. symbolic_equal is the verdict to agree with.
OracleVerdict randomized_equal(const Distribution& x, const Distribution& y, const std::set<Var>& symbols,
                               int trials, std::uint64_t seed, bool symbolic_equal);
OracleVerdict randomized_relation(const GKLOImage& img, const WordSum& lhs, const WordSum* rhs_words,
                                  const Distribution& rhs, int trials, std::uint64_t seed, bool symbolic_equal);
OracleVerdict randomized_torus(const std::vector<TorusWord>& lhs, const std::vector<TorusWord>& rhs,
                               const std::set<Var>& symbols, int trials, std::uint64_t seed, bool symbolic_equal);

// Expands gamma at infinity and at zero to the given order and compares
// the difference with the delta sum coefficientwise, at random numeric
// points for the non-spectral symbols.
bool truncated_series_check(const FactorCurrent& gamma, const Distribution& expansion, int order,
                            std::uint64_t seed, int points = 2);

}  // namespace iqg
