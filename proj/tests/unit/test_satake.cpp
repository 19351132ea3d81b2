#include "doctest.h"
#include "iqg/error.hpp"
#include "iqg/satake.hpp"

#include <algorithm>

using namespace iqg;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

Orientation arrows(int n, std::initializer_list<std::pair<int, int>> xs) {
  Orientation o(n, std::vector<bool>(n, false));
  for (auto [a, b] : xs) o[a][b] = true;
  return o;
}

}  // namespace

TEST_CASE("diagram validation") {
  auto a1 = validate_diagram(cartan_matrix("A1"), {0});
  CHECK(a1.split());
  CHECK(a1.fixed_nodes() == std::vector<int>{0});

  auto a3 = validate_diagram(cartan_matrix("A3"), tau_from_cycles(3, {{1, 3}}));
  CHECK(a3.fixed_nodes() == std::vector<int>{1});
  CHECK(a3.positive_nodes() == std::vector<int>{0});
  CHECK(a3.negative_nodes() == std::vector<int>{2});

  auto a2 = validate_diagram(cartan_matrix("A2"), tau_from_cycles(2, {{1, 2}}));
  CHECK(a2.c(0, a2.tau[0]) == -1);

  CHECK(kind_of([] { validate_diagram(cartan_matrix("A3"), {1, 0, 2}); }) == ErrorKind::TauNotAutomorphism);
  CHECK(kind_of([] { validate_diagram(cartan_matrix("A3"), {1, 2, 0}); }) == ErrorKind::TauNotInvolution);
  CHECK(kind_of([] { validate_diagram({{2, -2}, {-2, 2}}, {0, 1}); }) == ErrorKind::NotADE);
  CHECK(tau_cycles(a3.tau) == std::vector<std::vector<int>>{{1, 3}});
}

TEST_CASE("diagram invariants on the catalog") {
  for (const auto& inst : build_catalog()) {
    CAPTURE(inst.name);
    const auto& d = inst.diagram;
    for (auto [i, j] : d.edges()) CHECK(d.adjacent(d.tau[i], d.tau[j]));
    std::vector<int> all;
    for (auto v : {d.fixed_nodes(), d.positive_nodes(), d.negative_nodes()}) all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end());
    std::vector<int> expect(d.rank);
    for (int i = 0; i < d.rank; ++i) expect[i] = i;
    CHECK(all == expect);
    CHECK(d.positive_nodes().size() == d.negative_nodes().size());
    for (int i = 0; i < d.rank; ++i) {
      int lhs = inst.w[i];
      for (int j = 0; j < d.rank; ++j) lhs -= d.c(i, j) * inst.v[j];
      CHECK(lhs == inst.ell[i]);
      if (d.tau[i] != i && d.c(i, d.tau[i]) == -1) CHECK(inst.wp2[d.tau[i]] == -inst.wp2[i]);
    }
    CHECK_NOTHROW(validate_theta(d, inst.theta));
    CHECK(assign_wp(d, inst.orientation) == inst.wp2);
  }
}

TEST_CASE("shift solving") {
  auto a1 = validate_diagram(cartan_matrix("A1"), {0});
  CHECK(solve_shift(a1, {2}, {0}) == std::vector<int>{1});
  CHECK(kind_of([&] { solve_shift(a1, {1}, {0}); }) == ErrorKind::NotInCorootLattice);
  auto a2 = validate_diagram(cartan_matrix("A2"), {0, 1});
  CHECK(solve_shift(a2, {1, 1}, {0, 0}) == std::vector<int>{1, 1});
  CHECK(kind_of([&] { solve_shift(a2, {0, 0}, {1, 1}); }) == ErrorKind::NegativeMultiplicity);
}

TEST_CASE("shift values from the orientation") {
  auto s2 = validate_diagram(cartan_matrix("A2"), {0, 1});
  CHECK(assign_wp(s2, arrows(2, {{0, 1}})) == std::vector<int>{0, 0});
  CHECK(assign_wp(s2, arrows(2, {{1, 0}})) == std::vector<int>{0, 0});
  auto q2 = validate_diagram(cartan_matrix("A2"), tau_from_cycles(2, {{1, 2}}));
  CHECK(assign_wp(q2, arrows(2, {{0, 1}})) == std::vector<int>{-1, 1});
  auto q3 = validate_diagram(cartan_matrix("A3"), tau_from_cycles(3, {{1, 3}}));
  CHECK(assign_wp(q3, default_orientation(q3)) == std::vector<int>{0, 0, 0});
  auto q4 = validate_diagram(cartan_matrix("A4"), tau_from_cycles(4, {{1, 4}, {2, 3}}));
  CHECK_NOTHROW(validate_orientation(q4, default_orientation(q4)));
}

TEST_CASE("theta restrictions") {
  auto s2 = validate_diagram(cartan_matrix("A2"), {0, 1});
  CHECK_NOTHROW(validate_theta(s2, {1, 0}));
  CHECK(kind_of([&] { validate_theta(s2, {1, 1}); }) == ErrorKind::AdjacentThetas);
  auto q2 = validate_diagram(cartan_matrix("A2"), tau_from_cycles(2, {{1, 2}}));
  CHECK(kind_of([&] { validate_theta(q2, {1, 0}); }) == ErrorKind::ThetaOutsideFixedSet);
}

TEST_CASE("catalog contents") {
  auto cat = build_catalog();
  CHECK(cat.size() == 10);
  auto qs2 = catalog_instance("qsA2-v11");
  CHECK(qs2.v == std::vector<int>{1, 1});
  CHECK(qs2.w == std::vector<int>{1, 1});
  CHECK(qs2.ell == std::vector<int>{0, 0});
  auto qs4 = catalog_instance("qsA4-v1111");
  CHECK(qs4.v == std::vector<int>{1, 1, 1, 1});
  CHECK(qs4.w == std::vector<int>{1, 0, 0, 1});
  CHECK(qs4.ell == std::vector<int>{0, 0, 0, 0});
  CHECK_THROWS_AS(catalog_instance("nope"), Error);
}
