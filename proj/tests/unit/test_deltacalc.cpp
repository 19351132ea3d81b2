#include "doctest.h"
#include "iqg/deltacalc.hpp"
#include "iqg/error.hpp"
#include "iqg/oracle.hpp"

using namespace iqg;

namespace {

Scalar q(int k = 1) { return Scalar::qpow(2 * k); }
Scalar w(int k = 1) { return Scalar::var(var::W(1, 1), 2 * k); }
Scalar S(Var v, int k = 1) { return Scalar::var(v, k); }
Target wq(int qexp) { return Target(Monomial{{var::W(1, 1), 2}, {var::Q, 2 * qexp}}); }

bool same(const Distribution& a, const Distribution& b) { return canonicalize_compare(a, b).empty(); }

}  // namespace

TEST_CASE("pinning") {
  const Scalar one(1);
  CHECK(Distribution::pinned(var::u, wq(-1), one - w() / (q() * S(var::u))).is_zero());
  CHECK_THROWS_AS(Distribution::pinned(var::u, Target(), one / (one - S(var::u))), Error);

  DistTerm t{{}, (q(2) * S(var::u) - S(var::v)) * (q(2) * S(var::u, -1) - S(var::v)), {}};
  DistTerm p = pin_substitute(pin_substitute(t, var::u, wq(-1)), var::v, wq(1));
  CHECK(p.pins.size() == 2);
  CHECK(p.coeff == (q(2) * w() / q() - q() * w()) * (q(2) * q() / w() - q() * w()));
  // pinning then substituting the same variable changes nothing
  CHECK(p.coeff.substitute(var::u, Target(Monomial(var::Q, 5))) == p.coeff);
}

TEST_CASE("products conjugate pin targets") {
  const Scalar c = S(var::W(1, 1)) + q();
  Distribution x = Distribution::pinned(var::u, wq(-1), Scalar(1), shift_op(1, 1, -1));
  Distribution y = Distribution::pinned(var::v, wq(-1), c);
  Distribution xy = multiply_dist(x, y);
  REQUIRE(xy.size() == 1);
  const DistTerm t = xy.term_list().front();
  CHECK(t.pins == Pins{{var::u, wq(-1)}, {var::v, wq(-3)}});
  CHECK(t.coeff == conjugate_through(shift_op(1, 1, -1), c));
  CHECK(t.dmon == shift_op(1, 1, -1));
  CHECK(multiply_dist(x, Distribution()).is_zero());

  Distribution du = Distribution::pinned(var::u, Target(), Scalar(2));
  Distribution dv = Distribution::pinned(var::v, Target(), Scalar(3));
  Distribution uv = multiply_dist(du, dv);
  REQUIRE(uv.size() == 1);
  CHECK(uv.term_list().front().pins.size() == 2);
  CHECK(uv.term_list().front().coeff == Scalar(6));
}

TEST_CASE("brackets and symmetrization") {
  Distribution x = Distribution::pinned(var::u1, wq(-1), w(), shift_op(1, 1, -1));
  Distribution y = Distribution::pinned(var::u2, wq(1), Scalar(1), shift_op(1, 1));
  const Distribution c = Distribution::scalar(w(), shift_op(1, 1));
  CHECK(bracket_q(c, c, Scalar(1)).is_zero());
  CHECK_THROWS_AS(bracket_q(x, x, Scalar(1)), Error);
  CHECK(same(bracket_q(x, y, Scalar(0)), multiply_dist(x, y)));
  CHECK(same(bracket_q(x, y, q()), multiply_dist(x, y) - scale(q(), multiply_dist(y, x))));

  Distribution a = Distribution::pinned(var::u1, wq(-1), Scalar(1));
  a = multiply_dist(a, Distribution::pinned(var::u2, wq(1), Scalar(5)));
  Distribution sa = symmetrize(a, var::u1, var::u2);
  CHECK(same(sa, a + swap_vars(a, var::u1, var::u2)));
  CHECK(sa.size() == 2);
  CHECK(same(symmetrize(sa, var::u1, var::u2), sa + sa));

  Distribution sym = multiply_dist(Distribution::pinned(var::u1, Target(), Scalar(1)),
                                   Distribution::pinned(var::u2, Target(), Scalar(1)));
  CHECK(same(symmetrize(sym, var::u1, var::u2), sym + sym));
}

TEST_CASE("residue expansion") {
  const Scalar X = S(var::x), one(1);
  const Target a(Monomial(var::W(1, 1), 2));
  FactorCurrent g(var::x, X / (X - w()));
  auto rs = residues(g);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].point == a);
  CHECK(rs[0].residue == one);
  CHECK(same(expand_by_residues(g), Distribution::pinned(var::x, a, one)));

  CHECK(expand_by_residues(FactorCurrent(var::x, X * X - q() / X)).is_zero());

  const Scalar kappa = (one - q() * X) * (one - q(-1) * X) / ((one - X) * (one - X));
  auto kr = residues(FactorCurrent(var::x, (X - X.inverse()) * kappa));
  REQUIRE(kr.size() == 1);
  CHECK(kr[0].point == Target());

  CHECK_THROWS_AS(residues(FactorCurrent(var::x, kappa)), Error);
}

TEST_CASE("canonical comparison") {
  Distribution x = Distribution::pinned(var::u, wq(-1), w(), shift_op(1, 1, -1));
  CHECK(canonicalize_compare(x, x).empty());
  Distribution extra = Distribution::pinned(var::u, wq(1), Scalar(3), shift_op(1, 1));
  auto d = canonicalize_compare(x, x + extra);
  REQUIRE(d.size() == 1);
  CHECK(d[0].pins == Pins{{var::u, wq(1)}});
  CHECK(d[0].dmon == shift_op(1, 1));
  CHECK(d[0].rhs == Scalar(3));

  Distribution linked = Distribution::pinned(var::v, Target(Monomial(var::u, -1)), Scalar(1));
  try {
    canonicalize_compare(linked, Distribution());
    FAIL("expected UnpinnedResidual");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnpinnedResidual);
  }
}

TEST_CASE("series check on every catalog Cartan current") {
  for (const auto& inst : build_catalog()) {
    GKLOImage img(inst);
    for (int i = 0; i < img.rank(); ++i) {
      CAPTURE(inst.name);
      CAPTURE(i);
      const Scalar U = S(var::u);
      FactorCurrent g(var::u, (U - U.inverse()) * img.Xi(i).scalar());
      CHECK(truncated_series_check(g, expand_by_residues(g), 8, 17 + i));
    }
  }
}
