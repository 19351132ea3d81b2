#include "doctest.h"
#include "iqg/error.hpp"
#include "iqg/igklo.hpp"

using namespace iqg;

namespace {

Scalar u() { return Scalar::var(var::u); }

bool same_dist(const Distribution& a, const Distribution& b) { return canonicalize_compare(a, b).empty(); }

}  // namespace

TEST_CASE("currents on split A1 with one point") {
  GKLOImage g(catalog_instance("sA1-v1-t0"));
  Scalar w11 = Scalar::var(var::W(1, 1), 2);
  Scalar expect = Scalar::var(var::W(1, 1), -1) * (Scalar(1) - w11 / u());
  CHECK(g.W(0, u()) == expect);
  Scalar k = GKLOImage::kappa(u()) * (Scalar(1) - u()).pow(2);
  CHECK(k == (Scalar(1) - GKLOImage::q(1) * u()) * (Scalar(1) - GKLOImage::q(-1) * u()));
  CHECK(g.leading_K(0).contains_kind(VarKind::Zeta));
}

TEST_CASE("bold currents on quasi-split A2") {
  GKLOImage g(catalog_instance("qsA2-v11"));
  CHECK(g.Wb(0, u()) == g.W(0, u()) * g.W(1, u().inverse()));
  CHECK(g.blocks(0).size() == 2);
  // q^{1/2} zeta_1 / (1 - q^2) leading prefactor on the first sum
  const auto& b = g.blocks(0).front();
  CHECK(b.sign == 1);
  CHECK(g.instance().wp2[0] == -1);
  CHECK(g.extend_a2n(0).n == 2);
  CHECK(g.w(0, 2) == Scalar::var(var::W(2, 1), -2));
  CHECK(g.extend_a2n(0).prime(g.extend_a2n(0).prime(1)) == 1);
}

TEST_CASE("structural symmetries on the catalog") {
  for (const auto& inst : build_catalog()) {
    CAPTURE(inst.name);
    GKLOImage g(inst);
    const Scalar ui = u().inverse();
    CHECK(GKLOImage::kappa(u()) == GKLOImage::kappa(ui));
    for (int i = 0; i < g.rank(); ++i) {
      CAPTURE(i);
      const int t = g.tau(i);
      CHECK(g.Wb(i, u()) == g.Wb(t, ui));
      CHECK(g.Zb(i, u()) == g.Zb(t, ui));
      CHECK(g.Xi(i).inverted().scalar() == g.Xi(t).scalar());
      CHECK(g.Xi(i).top_degree() == inst.ell[t]);
      CHECK_NOTHROW(g.leading_K(i));
      CHECK(same_dist(g.B(i), g.B_direct(i)));
      for (const auto& b : g.blocks(i)) CHECK_NOTHROW(check_admissible(b.chi, g.partners()));
      if (inst.diagram.fixed(i) && !inst.theta[i]) CHECK(g.B(i).size() == static_cast<std::size_t>(2 * inst.v[i]));
    }
  }
}

TEST_CASE("constant term and corruption flags") {
  GKLOImage g(catalog_instance("sA2-v11-t10"));
  bool pinned_one = false;
  for (const auto& t : g.B(0).term_list()) {
    if (t.pins.size() == 1 && t.pins[0].second.mono.is_one()) pinned_one = true;
  }
  CHECK(pinned_one);
  GKLOImage h(catalog_instance("sA2-v11-t10"), Corruption{false, false, true});
  CHECK(h.B(0).size() == g.B(0).size() - 1);
  GKLOImage k(catalog_instance("sA1-v1-t1"), Corruption{true, false, false});
  CHECK_FALSE(same_dist(k.B(0), GKLOImage(catalog_instance("sA1-v1-t1")).B(0)));
}

TEST_CASE("corrupted multiplicity triggers DegreeMismatch") {
  ShiftInstance inst = catalog_instance("sA1-v1-t0");
  inst.v[0] += 1;
  GKLOImage g(inst);
  try {
    g.leading_K(0);
    FAIL("expected DegreeMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeMismatch);
  }
  CHECK_THROWS_AS(GKLOImage(catalog_instance("sA2-v11-t00")).extend_a2n(0), Error);
}
