// polyac: exact computer-algebra toolkit for polynomial-type algebraic
// complexities and elusive functions.  JSON in, JSON certificate out.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polyac/polyac.hpp"

namespace {

using namespace polyac;

constexpr int kSchemaVersion = 1;
constexpr const char* kToolVersion = "0.1.0";

/// Inline JSON, or @path, or "-" for stdin.
Json read_json_arg(const std::string& arg) {
  try {
    if (arg == "-") {
      std::stringstream ss;
      ss << std::cin.rdbuf();
      return Json::parse(ss.str());
    }
    if (!arg.empty() && arg[0] == '@') {
      std::ifstream in(arg.substr(1));
      if (!in) throw InvalidParams("cannot open " + arg.substr(1));
      std::stringstream ss;
      ss << in.rdbuf();
      return Json::parse(ss.str());
    }
    return Json::parse(arg);
  } catch (const Json::parse_error& e) {
    throw InvalidParams(std::string("bad JSON input: ") + e.what());
  }
}

Budget budget_from_env() {
  Budget b;
  if (const char* v = std::getenv("POLYAC_MAX_BASIS")) b.max_basis = std::stoull(v);
  if (const char* v = std::getenv("POLYAC_MAX_STEPS"))
    b.max_reduction_steps = std::stoull(v);
  return b;
}

Json certificate_header(const std::string& command, long seed) {
  return Json{{"schema_version", kSchemaVersion},
              {"tool_version", kToolVersion},
              {"command", command},
              {"seed", seed}};
}

MonomialOrder order_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "lex") return MonomialOrder::lex();
    if (s == "grevlex") return MonomialOrder::grevlex();
    throw InvalidParams("unknown order: " + s);
  }
  if (j.is_object() && j.contains("block"))
    return MonomialOrder::elimination(j.at("block").get<int>());
  throw InvalidParams("bad order spec");
}

Json order_to_json(const MonomialOrder& o) {
  switch (o.kind) {
    case MonomialOrder::Kind::Lex: return "lex";
    case MonomialOrder::Kind::GrevLex: return "grevlex";
    case MonomialOrder::Kind::Block: return Json{{"block", o.block}};
  }
  return nullptr;
}

FieldKind field_from_string(const std::string& s) {
  if (s == "real") return FieldKind::Real;
  if (s == "complex") return FieldKind::Complex;
  throw InvalidParams("field must be real or complex");
}

Json primes_to_json(const std::vector<std::uint64_t>& ps) {
  Json a = Json::array();
  for (auto p : ps) a.push_back(p);
  return a;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

struct Options {
  long seed = 0;
  std::string in;       // primary JSON input (map/poly/graph/tuple)
  std::string point;    // secondary JSON input
  std::string emit;     // "json" (default) | "dot"
};

int cmd_interp(const Options& opt, int s, int r, bool homogeneous) {
  const Json j = read_json_arg(opt.in);
  ValueTable vt;
  vt.lattice = simplex_lattice(s, r);
  for (const auto& row : j.at("values")) vt.values.push_back(point_from_json(row));
  const PolyMap f = homogeneous ? interpolate_homogeneous(vt) : interpolate(vt);
  Json out = certificate_header("interp", opt.seed);
  out["s"] = s;
  out["r"] = r;
  out["homogeneous"] = homogeneous;
  out["map"] = to_json(f);
  emit(out);
  return 0;
}

int cmd_gb(const Options& opt) {
  const Json j = read_json_arg(opt.in);
  Ideal ideal;
  ideal.nvars = j.at("nvars").get<int>();
  ideal.order = j.contains("order") ? order_from_json(j.at("order"))
                                    : MonomialOrder::grevlex();
  for (const auto& g : j.at("generators"))
    ideal.generators.push_back(poly_from_json(g));
  const Budget budget = budget_from_env();
  const GroebnerBasis gb = buchberger(ideal, budget);
  Json basis = Json::array();
  for (const auto& g : gb.basis) basis.push_back(to_json(g));
  Json out = certificate_header("gb", opt.seed);
  out["order"] = order_to_json(gb.order);
  out["basis"] = basis;
  out["contains_nonzero_constant"] = gb.contains_nonzero_constant();
  emit(out);
  return 0;
}

int cmd_image_ideal(const Options& opt) {
  const PolyMap f = poly_map_from_json(read_json_arg(opt.in));
  const auto gens = image_ideal(f, budget_from_env());
  Json out = certificate_header("image-ideal", opt.seed);
  out["order"] = order_to_json(MonomialOrder::grevlex());
  Json ga = Json::array();
  for (const auto& g : gens) ga.push_back(to_json(g));
  out["generators"] = ga;
  emit(out);
  return 0;
}

int cmd_member(const Options& opt, bool closure) {
  const PolyMap f = poly_map_from_json(read_json_arg(opt.in));
  const auto b = point_from_json(read_json_arg(opt.point));
  const Budget budget = budget_from_env();
  Json out = certificate_header("member", opt.seed);
  if (closure) {
    out["in_closure"] = in_zariski_closure(b, f, budget);
  } else {
    out["in_image"] = in_image_over_C(b, f, budget);
  }
  emit(out);
  return 0;
}

int cmd_detcomp(const Options& opt, int m_max) {
  const Poly f = poly_from_json(read_json_arg(opt.in));
  const auto r = det_complexity(f, m_max, budget_from_env());
  Json out = certificate_header("detcomp", opt.seed);
  out["m_max"] = m_max;
  if (r) {
    out["c_det"] = *r;
  } else {
    out["c_det"] = nullptr;
    out["above_cap"] = true;
  }
  emit(out);
  return 0;
}

int cmd_resultant_test(const Options& opt, bool symbolic) {
  const PolyMap f = poly_map_from_json(read_json_arg(opt.in));
  Json out = certificate_header("resultant-test", opt.seed);
  if (symbolic) {
    out["method"] = f.nvars() == 1 ? "sylvester" : "macaulay";
    out["test_polynomial"] = to_json(resultant_test_poly(f));
  } else {
    const auto b = point_from_json(read_json_arg(opt.point));
    const ResultantCertificate cert = resultant_test_value(f, b);
    out["method"] = cert.method;
    out["value"] = to_json(cert.value);
    out["matrix_dim"] = cert.matrix_dim;
    out["minor_dim"] = cert.minor_dim;
    out["off_image_certified"] = cert.certifies_off_image();
    out["note"] = cert.certifies_off_image()
                      ? "nonzero value: point is off the image"
                      : "zero value: inconclusive";
  }
  emit(out);
  return 0;
}

int cmd_build_elusive(const Options& opt, ElusiveSpec spec) {
  const ElusiveMap em = build_elusive_map(spec);
  Json out = certificate_header("build-elusive", opt.seed);
  out["n"] = spec.n;
  out["p"] = spec.p;
  out["s"] = spec.s;
  out["r"] = spec.r;
  out["m"] = spec.m;
  out["K"] = spec.K().get_str();
  out["field"] = spec.field == FieldKind::Complex ? "complex" : "real";
  out["basis"] =
      spec.basis == CoeffBasis::Monomial ? "monomial" : "pseudo-monomial";
  out["threshold"] = em.cert.threshold.get_str();
  out["compliant"] = em.cert.compliant;
  if (!em.cert.compliant) out["note"] = "heuristic - primes below paper bound";
  Json grid = Json::array();
  for (const auto& row : em.cert.primes) grid.push_back(primes_to_json(row));
  out["primes"] = grid;
  out["map"] = to_json(em.map);
  emit(out);
  return 0;
}

int cmd_check_elusive(const Options& opt, int s, int r) {
  const Json j = read_json_arg(opt.in);
  KTuple S;
  S.m = j.at("m").get<int>();
  for (const auto& row : j.at("points")) S.points.push_back(point_from_json(row));
  const bool elusive = is_elusive_bruteforce(S, s, r, budget_from_env());
  Json out = certificate_header("check-elusive", opt.seed);
  out["s"] = s;
  out["r"] = r;
  out["k"] = S.k();
  out["m"] = S.m;
  out["elusive"] = elusive;
  emit(out);
  return 0;
}

int cmd_klps_point(const Options& opt, int s, int m,
                   const std::string& degree_bound, const std::string& field,
                   const std::vector<std::string>& tail) {
  Matrix<Rational> mixing(s + 1, std::vector<Rational>(s + 1));
  for (int i = 0; i <= s; ++i) mixing[i][i] = Rational(1);
  std::vector<Rational> tail_q;
  for (const auto& t : tail) tail_q.push_back(Rational::parse(t));
  if (tail_q.empty()) tail_q.assign(m - s - 1, Rational(1));
  const KlpsPoint kp = klps_point(s, m, BigInt(degree_bound), mixing, tail_q,
                                  field_from_string(field));
  Json out = certificate_header("klps-point", opt.seed);
  out["s"] = s;
  out["m"] = m;
  out["degree_bound"] = degree_bound;
  out["field"] = field;
  out["threshold"] = kp.cert.threshold.get_str();
  out["primes"] = primes_to_json(kp.cert.primes);
  out["point"] = to_json(kp.point);
  emit(out);
  return 0;
}

int cmd_raz_lift(const Options& opt, bool flatten) {
  const PolyMap f = poly_map_from_json(read_json_arg(opt.in));
  const PolyMap ft = raz_lift(f);
  Json out = certificate_header("raz-lift", opt.seed);
  out["lift"] = to_json(ft);
  if (flatten) out["scalar"] = to_json(flatten_to_scalar(ft));
  emit(out);
  return 0;
}

int cmd_schedule_c45(const Options& opt, int nprime, int r) {
  const ScheduleC45 sc = schedule_c45(nprime, r);
  Json out = certificate_header("schedule", opt.seed);
  out["variant"] = "c45";
  out["n"] = sc.n;
  out["p"] = sc.p;
  out["m"] = sc.m;
  out["s"] = sc.s;
  out["claimed_size_bound"] = sc.claimed_size_bound;
  out["degenerate"] = sc.degenerate;
  emit(out);
  return 0;
}

int cmd_schedule_super(const Options& opt, int n, int rprime) {
  const ScheduleSuper sc = schedule_super(n, rprime);
  Json out = certificate_header("schedule", opt.seed);
  out["variant"] = "super";
  out["s"] = sc.s.get_str();
  out["m"] = sc.m.get_str();
  out["p"] = sc.p;
  out["r"] = sc.r;
  out["side_condition_ok"] = sc.side_condition_ok;
  emit(out);
  return 0;
}

int cmd_gamma(const Options& opt, const std::string& labels_arg) {
  const CircuitGraph g = CircuitGraph::from_json(read_json_arg(opt.in));
  if (opt.emit == "dot") {
    std::cout << g.to_dot();
    return 0;
  }
  const auto labels = point_from_json(read_json_arg(labels_arg));
  Json out = certificate_header("gamma", opt.seed);
  out["syntactic_degree"] = g.syntactic_degree();
  out["gamma"] = to_json(g.gamma(labels));
  emit(out);
  return 0;
}

int cmd_syndeg(const Options& opt) {
  const CircuitGraph g = CircuitGraph::from_json(read_json_arg(opt.in));
  if (opt.emit == "dot") {
    std::cout << g.to_dot();
    return 0;
  }
  Json out = certificate_header("syndeg", opt.seed);
  out["syntactic_degree"] = g.syntactic_degree();
  out["size"] = g.size();
  out["depth"] = g.depth();
  out["homogeneous"] = g.is_homogeneous();
  emit(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyac: exact algebraic-complexity and elusive-function toolkit"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--seed", opt.seed, "deterministic replay seed")
      ->default_val(0);

  // interp
  int arg_s = 1, arg_r = 1, arg_mmax = 3, arg_nprime = 1, arg_n = 1,
      arg_rprime = 4, arg_m = 1;
  bool arg_homogeneous = false, arg_closure = false, arg_symbolic = false,
       arg_flatten = false;
  std::string arg_field = "complex", arg_bound = "1", arg_labels;
  std::vector<std::string> arg_tail;
  ElusiveSpec espec;
  std::string espec_basis = "monomial", espec_field = "complex";

  auto* interp = app.add_subcommand("interp", "simplex-lattice interpolation");
  interp->add_option("--table", opt.in, "value table JSON (@file or -)")->required();
  interp->add_option("--s", arg_s)->required();
  interp->add_option("--r", arg_r)->required();
  interp->add_flag("--homogeneous", arg_homogeneous);

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
  gb->add_option("--ideal", opt.in, "ideal JSON")->required();

  auto* imid = app.add_subcommand("image-ideal", "generators of ker f*");
  imid->add_option("--map", opt.in, "PolyMap JSON")->required();

  auto* member = app.add_subcommand("member", "image membership over C");
  member->add_option("--map", opt.in)->required();
  member->add_option("--point", opt.point)->required();
  member->add_flag("--closure", arg_closure, "test Zariski closure instead");

  auto* detcomp = app.add_subcommand("detcomp", "determinantal complexity");
  detcomp->add_option("--poly", opt.in)->required();
  detcomp->add_option("--max", arg_mmax, "largest m probed")->required();

  auto* res = app.add_subcommand("resultant-test", "resultant image test");
  res->add_option("--map", opt.in)->required();
  res->add_option("--point", opt.point);
  res->add_flag("--symbolic", arg_symbolic, "emit the symbolic R_f instead");

  auto* belu = app.add_subcommand("build-elusive", "explicit elusive map");
  belu->add_option("--n", espec.n)->required();
  belu->add_option("--p", espec.p)->required();
  belu->add_option("--s", espec.s)->required();
  belu->add_option("--r", espec.r)->required();
  belu->add_option("--m", espec.m)->required();
  belu->add_option("--field", espec_field, "real | complex");
  belu->add_option("--basis", espec_basis, "monomial | pseudo-monomial");
  belu->add_option("--min-prime", espec.min_prime,
                   "heuristic prime floor (0 = paper threshold)");

  auto* celu = app.add_subcommand("check-elusive", "brute-force elusiveness");
  celu->add_option("--tuple", opt.in, "KTuple JSON {m, points}")->required();
  celu->add_option("--s", arg_s)->required();
  celu->add_option("--r", arg_r)->required();

  auto* klps = app.add_subcommand("klps-point", "root-of-unity off-image point");
  klps->add_option("--s", arg_s)->required();
  klps->add_option("--m", arg_m)->required();
  klps->add_option("--degree-bound", arg_bound)->required();
  klps->add_option("--field", arg_field, "real | complex");
  klps->add_option("--tail", arg_tail, "rational tail entries");

  auto* raz = app.add_subcommand("raz-lift", "Raz lift f~ (and scalar f^)");
  raz->add_option("--map", opt.in)->required();
  raz->add_flag("--flatten", arg_flatten, "also emit the scalar f^");

  auto* sched = app.add_subcommand("schedule", "parameter schedules");
  auto* c45 = sched->add_subcommand("c45");
  c45->add_option("--nprime", arg_nprime)->required();
  c45->add_option("--r", arg_r)->required();
  auto* super = sched->add_subcommand("super");
  super->add_option("--n", arg_n)->required();
  super->add_option("--rprime", arg_rprime)->required();
  sched->require_subcommand(1);

  auto* gamma = app.add_subcommand("gamma", "circuit coefficient map");
  gamma->add_option("--graph", opt.in)->required();
  gamma->add_option("--labels", arg_labels, "edge label point JSON");
  gamma->add_option("--emit", opt.emit, "json | dot");

  auto* syndeg = app.add_subcommand("syndeg", "circuit graph statistics");
  syndeg->add_option("--graph", opt.in)->required();
  syndeg->add_option("--emit", opt.emit, "json | dot");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*interp) return cmd_interp(opt, arg_s, arg_r, arg_homogeneous);
    if (*gb) return cmd_gb(opt);
    if (*imid) return cmd_image_ideal(opt);
    if (*member) return cmd_member(opt, arg_closure);
    if (*detcomp) return cmd_detcomp(opt, arg_mmax);
    if (*res) return cmd_resultant_test(opt, arg_symbolic);
    if (*belu) {
      espec.field = field_from_string(espec_field);
      if (espec_basis == "monomial") {
        espec.basis = CoeffBasis::Monomial;
      } else if (espec_basis == "pseudo-monomial") {
        espec.basis = CoeffBasis::PseudoMonomial;
      } else {
        throw InvalidParams("basis must be monomial or pseudo-monomial");
      }
      return cmd_build_elusive(opt, espec);
    }
    if (*celu) return cmd_check_elusive(opt, arg_s, arg_r);
    if (*klps)
      return cmd_klps_point(opt, arg_s, arg_m, arg_bound, arg_field, arg_tail);
    if (*raz) return cmd_raz_lift(opt, arg_flatten);
    if (*c45) return cmd_schedule_c45(opt, arg_nprime, arg_r);
    if (*super) return cmd_schedule_super(opt, arg_n, arg_rprime);
    if (*gamma) return cmd_gamma(opt, arg_labels);
    if (*syndeg) return cmd_syndeg(opt);
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const PrimeCapExceeded& e) {
    std::cerr << "prime cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
