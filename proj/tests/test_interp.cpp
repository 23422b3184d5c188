#include <doctest.h>

#include "util.hpp"

using namespace polyac;

namespace {

ValueTable table_from_map(const PolyMap& f, int r) {
  ValueTable t;
  t.lattice = simplex_lattice(f.nvars(), r);
  for (const auto& q : t.lattice.points)
    t.values.push_back(f.eval(detail::as_field_point(q)));
  return t;
}

}  // namespace

TEST_CASE("simplex lattice shape") {
  const auto lat = simplex_lattice(2, 2);
  CHECK(lat.points.size() == 6);
  CHECK(lat.points.front() == Monomial{0, 0});
  for (const auto& q : lat.points) CHECK(total_degree(q) <= 2);
  CHECK_THROWS_AS(simplex_lattice(0, 1), InvalidParams);
}

TEST_CASE("interpolation reproduces table values exactly") {
  auto g = testutil::rng(31);
  for (int s = 1; s <= 3; ++s)
    for (int r = 0; r <= 3; ++r) {
      ValueTable t;
      t.lattice = simplex_lattice(s, r);
      for (std::size_t i = 0; i < t.lattice.points.size(); ++i)
        t.values.push_back(testutil::random_point(g, 2));
      const PolyMap f = interpolate(t);
      CHECK(f.degree() <= r);
      for (std::size_t i = 0; i < t.lattice.points.size(); ++i)
        CHECK(f.eval(detail::as_field_point(t.lattice.points[i])) ==
              t.values[i]);
    }
}

TEST_CASE("interpolation inverts lattice evaluation") {
  auto g = testutil::rng(37);
  for (int it = 0; it < 10; ++it) {
    const PolyMap f = testutil::random_poly_map(g, 2, 2, 3);
    CHECK(interpolate(table_from_map(f, 3)) == f);
  }
}

TEST_CASE("univariate interpolation matches the inductive formula") {
  // values b_0 = 2, b_1 = 5 on {0, 1}: f = 2 + 3X
  ValueTable t;
  t.lattice = simplex_lattice(1, 1);
  t.values = {{FieldElem(2)}, {FieldElem(5)}};
  const PolyMap f = interpolate(t);
  Poly expect(1);
  expect.add_term({0}, FieldElem(2));
  expect.add_term({1}, FieldElem(3));
  CHECK(f.components[0] == expect);
}

TEST_CASE("homogeneous interpolation") {
  auto g = testutil::rng(41);
  const PolyMap f = testutil::random_poly_map(g, 2, 1, 2);
  const PolyMap h = interpolate_homogeneous(table_from_map(f, 2));
  CHECK(h.nvars() == 3);
  CHECK(h.is_homogeneous());
  for (const auto& q : simplex_lattice(2, 2).points) {
    auto pt = detail::as_field_point(q);
    pt.emplace_back(Rational(1));
    CHECK(h.eval(pt) == f.eval(detail::as_field_point(q)));
  }
}

TEST_CASE("value-vector isomorphism round trips") {
  auto g = testutil::rng(43);
  for (int it = 0; it < 5; ++it) {
    const PolyMap f = testutil::random_poly_map(g, 2, 2, 2);
    const auto flat = poly_to_lattice_values(f, 2);
    CHECK(flat.size() == 12);
    CHECK(iso_values_to_poly(flat, 2, 2, 2) == f);
  }
}

TEST_CASE("value table validation") {
  ValueTable t;
  t.lattice = simplex_lattice(1, 1);
  t.values = {{FieldElem(1)}};
  CHECK_THROWS_AS(t.validate(), LengthMismatch);
  t.values = {{FieldElem(1)}, {FieldElem(1), FieldElem(2)}};
  CHECK_THROWS_AS(t.validate(), DimensionMismatch);
}
