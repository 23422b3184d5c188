#include <doctest.h>

#include "util.hpp"

using namespace polyac;

namespace {

KTuple tuple_from(std::vector<std::vector<long>> rows) {
  KTuple t;
  t.m = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (const auto& r : rows) {
    std::vector<FieldElem> p;
    for (long v : r) p.emplace_back(v);
    t.points.push_back(std::move(p));
  }
  return t;
}

}  // namespace

TEST_CASE("ev_map evaluates pointwise and flattens point-major") {
  const EvMapSpec spec{2, 1, 1, 2};
  const Poly x = Poly::variable(1, 0);
  const PolyMap g({x, x * FieldElem(2) + Poly::constant(1, FieldElem(1))});
  const auto out = ev_map(spec, g, {{FieldElem(3)}, {FieldElem(5)}});
  CHECK(out == std::vector<FieldElem>{FieldElem(3), FieldElem(7), FieldElem(5),
                                      FieldElem(11)});
  CHECK_THROWS_AS(ev_map(spec, g, {{FieldElem(3)}}), DimensionMismatch);
  CHECK_THROWS_AS(ev_map(spec, PolyMap({x * x, x}),
                         {{FieldElem(0)}, {FieldElem(1)}}),
                  DimensionMismatch);
}

TEST_CASE("ev polynomial map matches direct evaluation") {
  const EvMapSpec spec{2, 2, 1, 2};
  const PolyMap ev = ev_polynomial_map(spec);
  CHECK(ev.dim() == 4);
  CHECK(ev.nvars() == 2 * 3 + 2);  // m * binom(s+r,s) coefficients + k*s points
  auto g = testutil::rng(79);
  for (int it = 0; it < 5; ++it) {
    const PolyMap gmap = testutil::random_poly_map(g, 1, 2, 2);
    const auto p1 = testutil::random_point(g, 1);
    const auto p2 = testutil::random_point(g, 1);
    std::vector<FieldElem> unknowns = coeff_vector(gmap, 2);
    unknowns.push_back(p1[0]);
    unknowns.push_back(p2[0]);
    CHECK(ev.eval(unknowns) == ev_map(spec, gmap, {p1, p2}));
  }
}

TEST_CASE("ev polynomial map degree is r + 1") {
  for (int r = 1; r <= 3; ++r) {
    const PolyMap ev = ev_polynomial_map(EvMapSpec{1, r, 1, 1});
    CHECK(ev.degree() == r + 1);
  }
}

TEST_CASE("elusive k bound") {
  CHECK(elusive_k_bound(1, 1, 2) == 5);
  CHECK(elusive_k_bound(1, 1, 3) == 4);
  CHECK(elusive_k_bound(2, 1, 3) == 10);
  CHECK_THROWS_AS(elusive_k_bound(2, 1, 2), InvalidParams);
  CHECK_THROWS_AS(elusive_k_bound(0, 1, 2), InvalidParams);
}

TEST_CASE("effective degree bound spot values") {
  CHECK(effective_degree_bound(1, 1) == 48);
  CHECK(effective_degree_bound(2, 1) == 192);
  CHECK(effective_degree_bound(1, 2) == 162);
  CHECK_THROWS_AS(effective_degree_bound(0, 1), InvalidParams);
}

TEST_CASE("klps point, complex case") {
  const auto out = klps_point(0, 2, BigInt(1), {{Rational(1)}}, {Rational(7)},
                              FieldKind::Complex);
  CHECK(out.cert.threshold == 3);
  CHECK(out.cert.primes == std::vector<std::uint64_t>{3});
  CHECK(out.cert.compliant);
  REQUIRE(out.point.size() == 2);
  CHECK(out.point[0].minimal_poly_degree() == 2);  // zeta_3
  CHECK(out.point[1] == FieldElem(7));
}

TEST_CASE("klps point, real case") {
  const auto out =
      klps_point(0, 1, BigInt(1), {{Rational(1)}}, {}, FieldKind::Real);
  CHECK(out.cert.threshold == 5);
  CHECK(out.cert.primes == std::vector<std::uint64_t>{5});
  REQUIRE(out.point.size() == 1);
  CHECK(out.point[0] == out.point[0].conj());  // real algebraic number
  CHECK(out.point[0].minimal_poly_degree() == 2);  // zeta_5 + conj
}

TEST_CASE("klps mixing produces triangular combinations") {
  const Matrix<Rational> mix = {{Rational(1), Rational(0)},
                                {Rational(2), Rational(1)}};
  const auto out = klps_point(1, 3, BigInt(1), mix, {Rational(0)},
                              FieldKind::Complex);
  CHECK(out.cert.primes == std::vector<std::uint64_t>{3, 5});
  const FieldElem b0 = root_of_unity(3), b1 = root_of_unity(5);
  CHECK(out.point[0] == b0);
  CHECK(out.point[1] == b0 * FieldElem(2) + b1);
  CHECK(out.point[2] == FieldElem(0));
}

TEST_CASE("klps point validation") {
  const Matrix<Rational> id1 = {{Rational(1)}};
  CHECK_THROWS_AS(klps_point(1, 3, BigInt(1), id1, {Rational(0)},
                             FieldKind::Complex),
                  DimensionMismatch);
  CHECK_THROWS_AS(klps_point(0, 2, BigInt(1), {{Rational(0)}}, {Rational(0)},
                             FieldKind::Complex),
                  InvalidParams);
  CHECK_THROWS_AS(klps_point(1, 3, BigInt(1),
                             {{Rational(1), Rational(1)},
                              {Rational(0), Rational(1)}},
                             {Rational(0)}, FieldKind::Complex),
                  InvalidParams);
  CHECK_THROWS_AS(klps_point(0, 2, BigInt(1), id1, {}, FieldKind::Complex),
                  LengthMismatch);
  CHECK_THROWS_AS(klps_point(0, 2, BigInt(10), id1, {Rational(0)},
                             FieldKind::Complex, 7),
                  PrimeCapExceeded);
}

TEST_CASE("build elusive map places primes lex-ascending per component") {
  ElusiveSpec spec;
  spec.n = 1;
  spec.p = 4;
  spec.s = 1;
  spec.r = 1;
  spec.m = 2;
  spec.min_prime = 3;
  const ElusiveMap out = build_elusive_map(spec);
  CHECK(!out.cert.compliant);  // desk-scale primes below the threshold
  REQUIRE(out.cert.primes.size() == 2);
  CHECK(out.cert.primes[0] == std::vector<std::uint64_t>{3, 5, 7, 11, 13});
  CHECK(out.cert.primes[1] == std::vector<std::uint64_t>{17, 19, 23, 29, 31});
  CHECK(out.map.nvars() == 1);
  CHECK(out.map.dim() == 2);
  CHECK(out.map.degree() == 4);
  // constant term of component 0 is the root at the smallest prime
  CHECK(out.map.components[0].coeff({0}) == root_of_unity(3));
  CHECK(out.map.components[0].coeff({4}) == root_of_unity(13));
}

TEST_CASE("elusive map is strongly (1,1)-elusive") {
  ElusiveSpec spec;
  spec.n = 1;
  spec.p = 4;
  spec.s = 1;
  spec.r = 1;
  spec.m = 2;
  spec.min_prime = 3;
  const ElusiveMap out = build_elusive_map(spec);
  CHECK(strong_elusiveness(out.map, 1, 1));
}

TEST_CASE("pseudo-monomial basis variant spans the same coefficients") {
  ElusiveSpec spec;
  spec.n = 1;
  spec.p = 4;
  spec.s = 1;
  spec.r = 1;
  spec.m = 2;
  spec.min_prime = 3;
  spec.basis = CoeffBasis::PseudoMonomial;
  const ElusiveMap out = build_elusive_map(spec);
  CHECK(out.cert.basis == CoeffBasis::PseudoMonomial);
  CHECK(out.map.degree() == 4);
  // pseudo-coefficients recover the grid roots
  const auto coeffs = to_pseudo(out.map.components[0], 4);
  CHECK(coeffs[0] == root_of_unity(3));
}

TEST_CASE("build elusive map rejects K below the bound") {
  ElusiveSpec spec;
  spec.n = 1;
  spec.p = 2;  // K = 3 < 5
  spec.s = 1;
  spec.r = 1;
  spec.m = 2;
  CHECK_THROWS_AS(build_elusive_map(spec), InvalidParams);
}

TEST_CASE("det-hard polynomial") {
  const auto out = det_hard_polynomial(1, 1, 3, FieldKind::Complex, 3);
  CHECK(out.cert.claimed_bound == 2);
  CHECK(!out.cert.compliant);
  CHECK(out.cert.primes == std::vector<std::uint64_t>{3, 5, 7});
  CHECK(out.poly.degree() == 3);
  CHECK(out.poly.terms().size() == 4);
  CHECK(out.poly.coeff({0}) == root_of_unity(3));
  CHECK(out.poly.coeff({3}) == FieldElem(1));  // past the KLPS prefix
  CHECK_THROWS_AS(det_hard_polynomial(1, 1, 1, FieldKind::Complex, 3),
                  InvalidParams);
}

TEST_CASE("det-hard polynomial defeats the 1x1 parametrization") {
  const auto out = det_hard_polynomial(1, 1, 3, FieldKind::Complex, 3);
  CHECK(det_complexity(out.poly, 1) == std::nullopt);
}

TEST_CASE("raz lift") {
  const Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
  const PolyMap f({x1, x2, x1 * x2, x1 * x1});  // n = 2, n^2 components
  const PolyMap ft = raz_lift(f);
  CHECK(ft.nvars() == 4);
  CHECK(ft.dim() == 2);
  // f~_i = f_{0n+i} Z_1 + f_{1n+i} Z_2
  const Poly z1 = Poly::variable(4, 2), z2 = Poly::variable(4, 3);
  const auto lift4 = [](const Poly& p) { return p.shifted(4, 0); };
  CHECK(ft.components[0] == lift4(x1) * z1 + lift4(x1 * x2) * z2);
  CHECK(ft.components[1] == lift4(x2) * z1 + lift4(x1 * x1) * z2);
  CHECK(ft.degree() == f.degree() + 1);
  CHECK_THROWS_AS(raz_lift(PolyMap({x1, x2, x1 * x2})), NotASquare);
}

TEST_CASE("flatten to scalar") {
  const Poly x = Poly::variable(1, 0);
  const PolyMap f({x, x * x});
  const Poly fl = flatten_to_scalar(f);
  CHECK(fl.nvars() == 3);
  // X Y1 + X^2 Y2
  CHECK(fl.coeff({1, 1, 0}) == FieldElem(1));
  CHECK(fl.coeff({2, 0, 1}) == FieldElem(1));
  CHECK(fl.terms().size() == 2);
}

TEST_CASE("parameter schedules") {
  const ScheduleC45 a = schedule_c45(2, 1);
  CHECK(a.n == 10);
  CHECK(a.p == 5);
  CHECK(a.m == 4);
  CHECK(a.s == 2);
  CHECK(!a.degenerate);
  CHECK(schedule_c45(1, 1).degenerate);  // s = floor(1/2) = 0
  CHECK_THROWS_AS(schedule_c45(1, 2), InvalidParams);

  const ScheduleSuper b = schedule_super(12, 4);
  CHECK(b.r == 7);
  CHECK(b.p == 21);
  CHECK(b.s == 1);
  CHECK(b.m == 16380);
  CHECK(b.side_condition_ok);
  CHECK(schedule_super(24, 4).s == 2);
  CHECK_THROWS_AS(schedule_super(12, 3), InvalidParams);
}

TEST_CASE("brute-force elusiveness: collinear tuples are not (1,1)-elusive") {
  // five points on the line y = 2x + 1
  const KTuple line = tuple_from({{0, 1}, {1, 3}, {2, 5}, {3, 7}, {4, 9}});
  CHECK(testutil::collinear(line.points));
  CHECK(!is_elusive_bruteforce(line, 1, 1));
  // five points on the parabola are off every affine line
  const KTuple par = tuple_from({{0, 0}, {1, 1}, {2, 4}, {3, 9}, {4, 16}});
  CHECK(!testutil::collinear(par.points));
  CHECK(is_elusive_bruteforce(par, 1, 1));
  // but a degree-2 curve reaches them
  CHECK(!is_elusive_bruteforce(par, 1, 2));
}

TEST_CASE("brute-force elusiveness agrees with the rank oracle") {
  auto g = testutil::rng(83);
  std::uniform_int_distribution<int> pick(-2, 2);
  int seen_elusive = 0, seen_not = 0;
  for (int it = 0; it < 8; ++it) {
    KTuple t;
    t.m = 2;
    for (int i = 0; i < 5; ++i)
      t.points.push_back({FieldElem(pick(g)), FieldElem(pick(g))});
    const bool el = is_elusive_bruteforce(t, 1, 1);
    CHECK(el == !testutil::collinear(t.points));
    (el ? seen_elusive : seen_not)++;
  }
  CHECK(seen_elusive > 0);  // the sample hits both outcomes
}

TEST_CASE("tuples sampled from a map are never elusive for its parameters") {
  auto g = testutil::rng(89);
  for (int it = 0; it < 4; ++it) {
    const PolyMap gmap = testutil::random_poly_map(g, 1, 3, 1);
    KTuple t;
    t.m = 3;
    for (int i = 0; i < 4; ++i)
      t.points.push_back(gmap.eval({FieldElem(i)}));
    CHECK(!is_elusive_bruteforce(t, 1, 1));
  }
}

TEST_CASE("s = 0 elusiveness is the non-constancy test") {
  const KTuple same = tuple_from({{1, 2}, {1, 2}});
  const KTuple diff = tuple_from({{1, 2}, {1, 3}});
  CHECK(!is_elusive_bruteforce(same, 0, 5));
  CHECK(is_elusive_bruteforce(diff, 0, 5));
  const Poly x = Poly::variable(1, 0);
  CHECK(strong_elusiveness(PolyMap({x}), 3, 0));
  CHECK(!strong_elusiveness(PolyMap({Poly::constant(1, FieldElem(4))}), 3, 0));
  KTuple empty;
  CHECK_THROWS_AS(is_elusive_bruteforce(empty, 0, 1), InvalidParams);
}

TEST_CASE("moment curve") {
  const PolyMap f = moment_curve(3);
  CHECK(f.dim() == 3);
  CHECK(f.eval({FieldElem(2)}) ==
        std::vector<FieldElem>{FieldElem(2), FieldElem(4), FieldElem(8)});
  CHECK_THROWS_AS(moment_curve(0), InvalidParams);
}
