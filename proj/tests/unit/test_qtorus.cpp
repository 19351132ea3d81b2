#include "doctest.h"
#include "iqg/error.hpp"
#include "iqg/qtorus.hpp"

#include <random>

using namespace iqg;

namespace {

Scalar q(int k = 1) { return Scalar::qpow(2 * k); }
Scalar w(int i, int r, int k = 1) { return Scalar::var(var::W(i, r), 2 * k); }

}  // namespace

TEST_CASE("conjugation through shift operators") {
  const Scalar half = Scalar::var(var::W(1, 1));
  CHECK(conjugate_through(shift_op(1, 1), half) == q() * half);
  CHECK(conjugate_through(shift_op(1, 1, -1), w(1, 1, 2)) == q(-4) * w(1, 1, 2));
  const Scalar z = Scalar::var(var::Z(1, 1));
  CHECK(conjugate_through(shift_op(1, 1), z) == z);
  CHECK(conjugate_through(shift_op(1, 1), w(1, 2)) == w(1, 2));
}

TEST_CASE("normal ordered products") {
  const TorusElement d(Scalar(1), shift_op(1, 1));
  const TorusElement wd(w(1, 1), shift_op(1, 1));
  CHECK(d * TorusElement(w(1, 1)) == TorusElement(q(2) * w(1, 1), shift_op(1, 1)));
  CHECK(wd * TorusElement(Scalar(1)) == wd);
  CHECK(wd * wd == TorusElement(q(2) * w(1, 1, 2), shift_op(1, 1, 2)));
  CHECK(d * TorusElement(Scalar(1), shift_op(1, 1, -1)) == TorusElement(Scalar(1)));
}

TEST_CASE("products are associative and distributive") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> ex(-1, 1), co(-3, 3);
  auto rnd = [&]() {
    TorusElement x;
    for (int t = 0; t < 2; ++t) {
      Scalar c(Monomial{{var::W(1, 1), ex(rng)}, {var::W(1, 2), ex(rng)}, {var::Q, ex(rng)}}, GaussRational(co(rng)));
      x += TorusElement(c, shift_op(1, 1, ex(rng)) * shift_op(1, 2, ex(rng)));
    }
    return x;
  };
  for (int k = 0; k < 20; ++k) {
    TorusElement a = rnd(), b = rnd(), c = rnd();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
  }
}

TEST_CASE("localization") {
  const Scalar one(1);
  const NodePairs none;
  CHECK_NOTHROW(check_admissible(one / (w(1, 1) - q(3) * w(1, 2)), none));
  CHECK_NOTHROW(check_admissible(one / (one - q(-1) * w(1, 1, 2)), none));
  CHECK_NOTHROW(check_admissible(one / (q(2) - one), none));
  try {
    check_admissible(one / (w(1, 1) - w(2, 1) - one), none);
    FAIL("expected LocalizationViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LocalizationViolation);
  }
  // mixed nodes are legal only for a tau pair
  const Scalar mixed = one / (one - w(1, 1) * w(3, 1));
  CHECK_THROWS_AS(check_admissible(mixed, none), Error);
  CHECK_NOTHROW(check_admissible(mixed, NodePairs{{1, 3}}));
}
