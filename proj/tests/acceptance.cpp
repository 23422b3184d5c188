// End-to-end checks, one verdict line each; exits nonzero on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "util.hpp"

using namespace polyac;

namespace {

int failures = 0;

void run(int number, const std::string& label,
         const std::function<bool()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::printf("%s  %2d  %s  [%.2fs]%s\n", ok ? "PASS" : "FAIL", number,
              label.c_str(), secs, note.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

Poly spoly(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  const auto lead = [&](const Poly& p) {
    auto best = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
      if (ord.greater(it->first, best->first)) best = it;
    return *best;
  };
  const auto [mf, cf] = lead(f);
  const auto [mg, cg] = lead(g);
  const Monomial l = mono_lcm(mf, mg);
  Monomial sf(l), sg(l);
  for (std::size_t i = 0; i < l.size(); ++i) {
    sf[i] -= mf[i];
    sg[i] -= mg[i];
  }
  return f * Poly::term(f.nvars(), sf, cf.inverse()) -
         g * Poly::term(g.nvars(), sg, cg.inverse());
}

bool basis_self_check(const Ideal& ideal) {
  const GroebnerBasis gb = buchberger(ideal);
  for (std::size_t i = 0; i < gb.basis.size(); ++i)
    for (std::size_t j = i + 1; j < gb.basis.size(); ++j)
      if (!normal_form(spoly(gb.basis[i], gb.basis[j], gb.order), gb).is_zero())
        return false;
  // determinism: byte-identical serialization across runs
  const auto dump = [](const GroebnerBasis& b) {
    std::string s;
    for (const auto& g : b.basis) s += to_json(g).dump() + "\n";
    return s;
  };
  return dump(gb) == dump(buchberger(ideal));
}

}  // namespace

int main() {
  run(1, "determinantal complexity, exact", [] {
    Poly lin(1);
    lin.add_term({1}, FieldElem(1));
    lin.add_term({0}, FieldElem(3));
    if (det_complexity(lin, 2) != 1) return false;
    const Poly x1 = Poly::variable(4, 0), x2 = Poly::variable(4, 1),
               x3 = Poly::variable(4, 2), x4 = Poly::variable(4, 3);
    const Poly d = x1 * x2 - x3 * x4;
    // the 2x2 witness [[X1, X3], [X4, X2]] realizes d
    if (gbdetail::det_poly({{x1, x3}, {x4, x2}}) != d) return false;
    if (det_complexity(d, 1) != std::nullopt) return false;  // m = 1 refuted
    return det_complexity(d, 2) == 2;
  });

  run(2, "image ideal of the moment curves", [] {
    const auto member = [](const Poly& f, const std::vector<Poly>& gens) {
      Ideal id;
      id.nvars = f.nvars();
      id.generators = gens;
      return normal_form(f, buchberger(id)).is_zero();
    };
    const auto equal_ideals = [&](const std::vector<Poly>& a,
                                  const std::vector<Poly>& b) {
      for (const auto& f : a)
        if (!member(f, b)) return false;
      for (const auto& f : b)
        if (!member(f, a)) return false;
      return true;
    };
    const Poly y1 = Poly::variable(2, 0), y2 = Poly::variable(2, 1);
    if (!equal_ideals(image_ideal(moment_curve(2)), {y2 - y1 * y1}))
      return false;
    const Poly z1 = Poly::variable(3, 0), z2 = Poly::variable(3, 1),
               z3 = Poly::variable(3, 2);
    return equal_ideals(image_ideal(moment_curve(3)),
                        {z2 - z1 * z1, z3 - z1 * z2});
  });

  run(3, "interpolation exactness", [] {
    auto g = testutil::rng(211);
    for (int s = 1; s <= 3; ++s)
      for (int r = 0; r <= 4; ++r)
        for (int rep = 0; rep < 20; ++rep) {
          ValueTable t;
          t.lattice = simplex_lattice(s, r);
          for (std::size_t i = 0; i < t.lattice.points.size(); ++i)
            t.values.push_back(testutil::random_point(g, 2));
          const PolyMap f = interpolate(t);
          for (std::size_t i = 0; i < t.lattice.points.size(); ++i)
            if (f.eval(detail::as_field_point(t.lattice.points[i])) !=
                t.values[i])
              return false;
          const PolyMap h = testutil::random_poly_map(g, s, 2, r);
          ValueTable th;
          th.lattice = t.lattice;
          for (const auto& q : th.lattice.points)
            th.values.push_back(h.eval(detail::as_field_point(q)));
          if (interpolate(th) != h) return false;
        }
    return true;
  });

  run(4, "brute-force elusiveness vs rank oracle", [] {
    auto g = testutil::rng(223);
    std::uniform_int_distribution<int> pick(-3, 3);
    for (int rep = 0; rep < 20; ++rep) {
      KTuple t;
      t.m = 2;
      for (int i = 0; i < 5; ++i)
        t.points.push_back({FieldElem(pick(g)), FieldElem(pick(g))});
      if (is_elusive_bruteforce(t, 1, 1) != !testutil::collinear(t.points))
        return false;
    }
    return true;
  });

  run(5, "moment-curve tuple is (1,1)-elusive", [] {
    const PolyMap f = moment_curve(2);
    KTuple t;
    t.m = 2;
    t.points.push_back({FieldElem(0), FieldElem(0)});
    t.points.push_back({FieldElem(1), FieldElem(0)});  // e1
    t.points.push_back({FieldElem(0), FieldElem(1)});  // e2
    t.points.push_back(f.eval({FieldElem(2)}));
    t.points.push_back(f.eval({FieldElem(3)}));
    return is_elusive_bruteforce(t, 1, 1);
  });

  run(6, "evaluation map has total degree r + 1", [] {
    for (int r = 1; r <= 3; ++r)
      if (ev_polynomial_map(EvMapSpec{1, r, 1, 1}).degree() != r + 1)
        return false;
    return true;
  });

  run(7, "resultant identities", [] {
    auto g = testutil::rng(227);
    const PolyMap f = moment_curve(2);
    for (int rep = 0; rep < 100; ++rep) {
      const auto a = testutil::random_point(g, 1);
      if (!resultant_test_value(f, f.eval(a)).value.is_zero()) return false;
    }
    const Poly r = resultant_test_poly(f);
    const Poly y1 = Poly::variable(2, 0), y2 = Poly::variable(2, 1);
    const Poly target = y2 - y1 * y1;
    if (r != target && r != target * FieldElem(-1)) return false;
    for (int rep = 0; rep < 20; ++rep) {
      const Poly a = testutil::random_poly(g, 1, 3);
      const Poly b = testutil::random_poly(g, 1, 2);
      if (a.degree() < 1 || b.degree() < 1) continue;
      std::vector<Poly> forms;
      for (const Poly& c : {a, b}) {
        Poly form(2);
        for (const auto& [m, coef] : c.terms())
          form.add_term({m[0], c.degree() - m[0]}, coef);
        forms.push_back(form);
      }
      if (macaulay_resultant(forms) != sylvester_resultant(a, b)) return false;
    }
    return true;
  });

  run(8, "cyclotomic minimal polynomial degrees", [] {
    for (unsigned p : {3u, 5u, 7u, 11u, 13u}) {
      const FieldElem z = root_of_unity(p);
      if (z.minimal_poly_degree() != p - 1) return false;
      if (z.real_part().minimal_poly_degree() != (p - 1) / 2) return false;
    }
    return true;
  });

  run(9, "closed-form spot values", [] {
    if (effective_degree_bound(1, 1) != 48) return false;
    if (effective_degree_bound(2, 1) != 192) return false;
    if (effective_degree_bound(1, 2) != 162) return false;
    if (elusive_k_bound(1, 1, 2) != 5) return false;
    const ScheduleC45 sc = schedule_c45(2, 1);
    if (sc.n != 10 || sc.p != 5 || sc.m != 4 || sc.s != 2) return false;
    return dim_pol(2, 2) == 6;
  });

  run(10, "circuit-graph coherence on random DAGs", [] {
    auto g = testutil::rng(229);
    for (int rep = 0; rep < 50; ++rep) {
      const CircuitGraph c = testutil::random_circuit(g);
      const auto labels = testutil::random_labels(g, c);
      const PolyMap f = c.evaluate(labels);
      const int r = c.syntactic_degree();
      if (f.degree() > r) return false;
      if (c.gamma(labels) != coeff_vector(f, r)) return false;
    }
    return true;
  });

  run(11, "groebner self-checks", [] {
    auto g = testutil::rng(233);
    const Poly x = Poly::variable(3, 0), y = Poly::variable(3, 1),
               z = Poly::variable(3, 2);
    std::vector<Ideal> samples;
    Ideal a;
    a.nvars = 3;
    a.generators = {y - x * x, z - x * x * x};
    a.order = MonomialOrder::lex();
    samples.push_back(a);
    Ideal b;
    b.nvars = 3;
    b.generators = {x * y - z, y * z - x, x * x + y * y - z * z};
    samples.push_back(b);
    for (int rep = 0; rep < 3; ++rep) {
      Ideal c;
      c.nvars = 2;
      for (int i = 0; i < 3; ++i)
        c.generators.push_back(testutil::random_poly(g, 2, 2));
      samples.push_back(c);
    }
    for (const auto& id : samples)
      if (!basis_self_check(id)) return false;
    return true;
  });

  std::printf("%d of 11 criteria passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
