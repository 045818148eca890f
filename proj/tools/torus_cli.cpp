// torus: command-line front end.  Every command prints one JSON object (or
// JSON lines for streams) tagged with the schema version.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "torus/config.hpp"
#include "torus/error.hpp"
#include "torus/json_io.hpp"

using namespace torus;
using io::Json;
using io::to_json;

namespace {

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
  std::optional<std::uint64_t> trial_bound;
  std::optional<double> height_bound;
  std::optional<double> bogomolov;
  bool jsonl = false;

  std::string op;
  std::string basis, point, gamma, variety, curve, map, at, p_poly, q_poly;
  std::optional<std::size_t> ambient;
  std::size_t codim = 1;
  std::optional<long> bound;
  bool connected_only = false;
  long gamma_bound = 1;
  long box_bound = 2;
  std::optional<std::size_t> samples;
  std::optional<double> target_err;
  unsigned max_iter = 100;
  long deg_bound = 2;
  unsigned iterate_bound = 2;
  std::optional<std::size_t> digit_cap;
};

Config effective_config(const Options& o) {
  Config c;
  if (!o.config_path.empty()) c = load_config(o.config_path);
  if (o.seed) c.seed = *o.seed;
  if (o.workers) c.workers = *o.workers;
  if (o.trial_bound) c.trial_division_bound = *o.trial_bound;
  if (o.height_bound) c.height_bound = *o.height_bound;
  if (o.bogomolov) c.bogomolov_constant = *o.bogomolov;
  if (o.samples) c.samples = *o.samples;
  if (o.target_err) c.target_err = *o.target_err;
  if (o.digit_cap) c.digit_cap = *o.digit_cap;
  if (o.bound) c.search_bound = *o.bound;
  if (c.workers == 0 || c.search_bound <= 0 || c.trial_division_bound == 0)
    throw ParseError("bounds and worker counts must be positive");
  return c;
}

Json header(const std::string& command) {
  return Json{{"schema", io::kSchema}, {"command", command}};
}

void merge(Json& into, const Json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw ParseError(std::string("missing ") + flag);
}

Lattice basis_lattice(const Options& o) {
  require(o.basis, "--basis");
  return Lattice::row_span(io::parse_int_matrix(o.basis, o.ambient.value_or(0)));
}

TorusPoint point_arg(const Options& o, const Config& c) {
  require(o.point, "--point");
  return parse_point(o.point, c.trial_division_bound);
}

// ---- lat ----------------------------------------------------------------

void run_lat(const Options& o) {
  require(o.basis, "--basis");
  const IntMatrix m = io::parse_int_matrix(o.basis, o.ambient.value_or(0));
  const Lattice l = Lattice::row_span(m);
  Json out = header("lat " + o.op);
  if (o.op == "hnf") {
    const auto h = hnf(m);
    out["hnf"] = to_json(h.h);
    out["transform"] = to_json(h.u);
    out["rank"] = h.rank;
  } else if (o.op == "snf") {
    const auto s = snf(m);
    out["invariant_factors"] = to_json(s.invariant_factors);
    out["d"] = to_json(s.d);
    out["u"] = to_json(s.u);
    out["v"] = to_json(s.v);
  } else if (o.op == "saturate") {
    out["saturation"] = to_json(saturate(l));
    out["index"] = to_json(minors_gcd(l.basis(), l.rank()));
  } else if (o.op == "primitive") {
    out["primitive"] = is_primitive(l);
    out["minors_gcd"] = to_json(minors_gcd(l.basis(), l.rank()));
  } else if (o.op == "orthogonal") {
    out["orthogonal"] = to_json(orthogonal(l));
  } else if (o.op == "reduce") {
    if (l.rank() == 0) throw DomainError("cannot reduce the zero lattice");
    const auto r = reduced_basis(l);
    out["basis"] = to_json(r.basis);
    out["product_ratio"] = io::real(r.product_ratio);
  } else if (o.op == "gram") {
    merge(out, to_json(gram_det(l)));
    out["rank"] = l.rank();
  }
  emit(out);
}

// ---- grp ----------------------------------------------------------------

void run_grp(const Options& o, const Config& c) {
  Json out = header("grp " + o.op);
  if (o.op == "enum") {
    if (!o.ambient) throw ParseError("missing --ambient");
    std::size_t index = 0;
    Json list = Json::array();
    for_each_subgroup(*o.ambient, o.codim, c.search_bound, o.connected_only,
                      [&](const AlgebraicSubgroup& h) {
                        if (o.jsonl) {
                          Json line = header("grp enum");
                          line["index"] = index;
                          merge(line, to_json(h));
                          emit(line);
                        } else {
                          list.push_back(to_json(h));
                        }
                        ++index;
                      });
    if (!o.jsonl) {
      out["ambient"] = *o.ambient;
      out["codim"] = o.codim;
      out["bound"] = c.search_bound;
      out["connected_only"] = o.connected_only;
      out["count"] = index;
      out["subgroups"] = list;
      emit(out);
    }
    return;
  }
  const AlgebraicSubgroup h(basis_lattice(o));
  if (o.op == "build") {
    merge(out, to_json(h));
  } else if (o.op == "connected") {
    out["connected"] = h.connected();
    out["identity_component"] = to_json(identity_component(h).lattice().basis());
  } else if (o.op == "components") {
    out["components"] = to_json(h.component_count());
    Json reps = Json::array();
    for (const auto& r : coset_representatives(h)) reps.push_back(to_json(r));
    out["coset_representatives"] = reps;
  } else if (o.op == "param") {
    const auto map = parametrize(h);
    out["exponents"] = to_json(map.exponents);
    out["parameters"] = map.parameters();
  } else if (o.op == "member") {
    out["member"] = membership(point_arg(o, c), h);
  }
  emit(out);
}

// ---- deps ---------------------------------------------------------------

void run_deps(const Options& o, const Config& c) {
  const TorusPoint p = point_arg(o, c);
  Json out = header("deps " + o.op);
  if (o.op == "relations") {
    out["relations"] = to_json(relation_lattice(p));
  } else if (o.op == "dependent") {
    out["dependent"] = is_multiplicatively_dependent(p);
  } else if (o.op == "primitive-dependent") {
    const auto rel = primitive_relation(p);
    out["dependent"] = is_multiplicatively_dependent(p);
    out["primitive"] = rel.has_value();
    out["relation"] = rel ? to_json(*rel) : Json(nullptr);
  } else if (o.op == "decompose") {
    const auto d = group_decomposition(p);
    merge(out, to_json(d));
    out["reconstructs"] = d.reconstruct() == p;
    out["schlickewei_ratio"] =
        d.rank() ? io::real(schlickewei_ratio(d, c.samples, c.seed)) : Json(nullptr);
    out["seed"] = c.seed;
    double min_h = 0;
    bool any = false;
    for (const auto& x : p.coords)
      if (!x.is_torsion()) {
        min_h = any ? std::min(min_h, x.weil_height()) : x.weil_height();
        any = true;
      }
    out["min_nontorsion_height"] = any ? io::real(min_h) : Json(nullptr);
    if (c.bogomolov_constant)
      out["bogomolov_ok"] = !any || min_h >= *c.bogomolov_constant;
  } else if (o.op == "decompose-gamma") {
    require(o.gamma, "--gamma");
    const auto g = io::parse_gamma(o.gamma, p.ambient(), c.trial_division_bound);
    const auto d = group_decomposition_mod_gamma(p, g);
    merge(out, to_json(d));
    out["reconstructs"] = d.reconstruct(g) == p;
  }
  emit(out);
}

// ---- witness ------------------------------------------------------------

void run_witness(const Options& o, const Config& c) {
  Json out = header(o.op == "gate" ? "witness gate" : "witness");
  if (o.op == "gate") {
    const AlgebraicSubgroup h(basis_lattice(o));
    GateResult g;
    if (!o.curve.empty()) {
      g = anomaly_gate(parse_curve(o.curve), h, o.codim);
    } else {
      require(o.variety, "--variety or --curve");
      g = anomaly_gate(parse_system(o.variety, o.ambient.value_or(h.ambient())), h, o.codim);
    }
    out["verdict"] = to_string(g.verdict);
    out["intersection_dim"] = g.intersection_dim;
    emit(out);
    return;
  }
  const TorusPoint p = point_arg(o, c);
  out["point"] = to_json(p);
  out["codim"] = o.codim;
  out["bound"] = c.search_bound;
  merge(out, to_json(witness_subgroup(p, o.codim, c.search_bound)));
  emit(out);
}

// ---- sieve --------------------------------------------------------------

void run_sieve(const Options& o, const Config& c) {
  Json out = header("sieve " + o.op);
  if (o.op == "characters" || o.op == "coset" || o.op == "divisors") {
    require(o.curve, "--curve");
    const ParamCurve curve = parse_curve(o.curve);
    out["curve"] = curve.to_string();
    if (o.op == "characters") {
      merge(out, to_json(find_primitive_characters(curve, o.box_bound)));
    } else if (o.op == "coset") {
      const auto cc = coset_containment(curve);
      out["contained"] = cc.has_value();
      out["coset"] = cc ? to_json(*cc) : Json(nullptr);
    } else {
      const auto t = divisor_table(curve, c.trial_division_bound);
      out["divisor_table"] = to_json(t);
      out["column_degrees"] = to_json(t.column_degrees());
    }
    emit(out);
    return;
  }
  require(o.variety, "--variety");
  const LaurentSystem x = parse_system(o.variety, o.ambient.value_or(0));
  out["variety"] = x.to_string();
  if (o.op == "intersect") {
    merge(out, to_json(intersect_curve_subgroup(x, AlgebraicSubgroup(basis_lattice(o)))));
    emit(out);
    return;
  }
  SieveOptions so;
  so.codim = o.codim;
  so.bound = c.search_bound;
  so.connected_only = o.connected_only;
  so.workers = c.workers;
  so.height_bound = c.height_bound;
  out["codim"] = o.codim;
  out["bound"] = c.search_bound;
  out["connected_only"] = o.connected_only;
  SieveReport rep;
  if (o.op == "gamma") {
    require(o.gamma, "--gamma");
    const auto g = io::parse_gamma(o.gamma, x.ambient, c.trial_division_bound);
    rep = gamma_enlarged_sieve(x, so, g, o.gamma_bound);
    out["gamma_bound"] = o.gamma_bound;
  } else {
    rep = abelian_point_sieve(x, so);
  }
  Json body = to_json(rep);
  if (o.op == "gamma") {
    body["max_gamma_exponent"] = to_json(rep.max_gamma_exponent);
    body["max_residual_exponent"] = to_json(rep.max_residual_exponent);
  }
  if (o.jsonl) {
    for (const auto& p : body["points"]) {
      Json line = header("sieve " + o.op);
      merge(line, p);
      emit(line);
    }
    body.erase("points");
    Json summary = out;
    summary["summary"] = body;
    emit(summary);
    return;
  }
  merge(out, body);
  emit(out);
}

// ---- dyn ----------------------------------------------------------------

void run_dyn(const Options& o, const Config& c) {
  require(o.map, "--map");
  const PolyMap f = parse_polymap(o.map);
  Json out = header("dyn " + o.op);
  out["map"] = f.to_string();
  auto at = [&]() -> Rat {
    require(o.at, "--at");
    const RatFunc v = parse_ratfunc(o.at, "x");
    if (v.num().degree() > 0 || v.den().degree() > 0) throw ParseError("--at must be a rational number");
    return v.num().coeff(0) / v.den().coeff(0);
  };
  if (o.op == "height") {
    const Rat a = at();
    out["at"] = to_json(a);
    merge(out, to_json(canonical_height(f, a, c.target_err, c.digit_cap)));
  } else if (o.op == "periodic") {
    const Rat a = at();
    out["at"] = to_json(a);
    const auto per = is_periodic(f, a, o.max_iter, c.digit_cap);
    out["periodic"] = per.has_value();
    out["preperiod"] = per ? Json(per->preperiod) : Json(nullptr);
    out["period"] = per ? Json(per->period) : Json(nullptr);
  } else if (o.op == "commute") {
    Json list = Json::array();
    for (const auto& g : commuting_polys(f, o.deg_bound, o.iterate_bound)) list.push_back(to_json(g));
    out["deg_bound"] = o.deg_bound;
    out["iterate_bound"] = o.iterate_bound;
    out["commuting"] = list;
  } else if (o.op == "classify") {
    merge(out, to_json(chebyshev_or_monomial(f)));
  } else if (o.op == "intersect") {
    require(o.curve, "--curve");
    out["curve"] = o.curve;
    merge(out, to_json(curve_periodic_intersection(parse_laurent(o.curve, 2), f, o.deg_bound,
                                                   o.iterate_bound)));
  } else if (o.op == "semiconj") {
    require(o.p_poly, "--p");
    require(o.q_poly, "--q");
    auto poly = [](const std::string& s) {
      const RatFunc r = parse_ratfunc(s, "x");
      if (!r.is_polynomial()) throw DomainError("'" + s + "' is not a polynomial");
      return r.num() * RatPoly::constant(1 / r.den().leading());
    };
    out["semiconjugate"] = check_semiconjugacy(f.poly(), poly(o.p_poly), poly(o.q_poly));
  }
  emit(out);
}

int fail(int code, const std::string& kind, const std::string& message) {
  Json out{{"schema", io::kSchema}, {"error", Json{{"kind", kind}, {"message", message}}}};
  emit(out);
  std::cerr << "torus: " << message << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact lattice and torus-point toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", o.config_path, "key = value configuration file");
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--workers", o.workers, "worker threads");
  app.add_option("--trial-bound", o.trial_bound, "trial division bound");
  app.add_option("--height-bound", o.height_bound, "height bound checked by the sieve");
  app.add_option("--bogomolov", o.bogomolov, "Bogomolov constant checked by decompositions");
  app.add_flag("--jsonl", o.jsonl, "stream results as JSON lines");

  auto op = [&](CLI::App* sub, std::vector<std::string> ops, bool required = true) {
    auto* opt = sub->add_option("op", o.op, "operation")->check(CLI::IsMember(ops));
    if (required)
      opt->required();
    else
      o.op.clear();
  };

  auto* lat = app.add_subcommand("lat", "integer lattices");
  op(lat, {"hnf", "snf", "saturate", "primitive", "orthogonal", "reduce", "gram"});
  lat->add_option("--basis", o.basis, "rows, e.g. [[2,4]]");
  lat->add_option("--ambient", o.ambient, "ambient dimension (for an empty basis)");

  auto* grp = app.add_subcommand("grp", "algebraic subgroups");
  op(grp, {"build", "connected", "components", "param", "member", "enum"});
  grp->add_option("--basis", o.basis, "defining character rows");
  grp->add_option("--ambient", o.ambient, "ambient dimension");
  grp->add_option("--point", o.point, "point, e.g. (zeta(6), 1/2)");
  grp->add_option("--codim", o.codim, "minimal codimension");
  grp->add_option("--bound", o.bound, "entry bound");
  grp->add_flag("--connected-only", o.connected_only, "only connected subgroups");

  auto* deps = app.add_subcommand("deps", "multiplicative dependence");
  op(deps, {"relations", "dependent", "primitive-dependent", "decompose", "decompose-gamma"});
  deps->add_option("--point", o.point, "point, e.g. (-1, 2)");
  deps->add_option("--gamma", o.gamma, "generators per coordinate, e.g. \"2;3\"");
  deps->add_option("--samples", o.samples, "samples for the Schlickewei ratio");

  auto* wit = app.add_subcommand("witness", "witness subgroups");
  op(wit, {"build", "gate"}, false);
  wit->add_option("--point", o.point, "point");
  wit->add_option("--codim", o.codim, "codimension s");
  wit->add_option("--bound", o.bound, "search bound B");
  wit->add_option("--basis", o.basis, "subgroup rows (gate)");
  wit->add_option("--variety", o.variety, "hypersurface (gate)");
  wit->add_option("--curve", o.curve, "parametrized curve (gate)");
  wit->add_option("--ambient", o.ambient, "ambient dimension");

  auto* sieve = app.add_subcommand("sieve", "point sieves and curve divisors");
  op(sieve, {"plain", "gamma", "characters", "coset", "divisors", "intersect"}, false);
  sieve->add_option("--variety", o.variety, "Laurent system, equations separated by ';'");
  sieve->add_option("--ambient", o.ambient, "ambient dimension");
  sieve->add_option("--codim", o.codim, "codimension s");
  sieve->add_option("--bound", o.bound, "subgroup entry bound B");
  sieve->add_flag("--connected-only", o.connected_only, "only connected subgroups");
  sieve->add_option("--gamma", o.gamma, "generators per coordinate");
  sieve->add_option("--gamma-bound", o.gamma_bound, "exponent bound for gamma");
  sieve->add_option("--curve", o.curve, "parametrized curve, e.g. (t, 1-t)");
  sieve->add_option("--box-bound", o.box_bound, "character box in the degenerate case");
  sieve->add_option("--basis", o.basis, "subgroup rows (intersect)");

  auto* dyn = app.add_subcommand("dyn", "polynomial dynamics");
  op(dyn, {"height", "periodic", "commute", "classify", "intersect", "semiconj"});
  dyn->add_option("--map", o.map, "polynomial in x, e.g. x^2-1");
  dyn->add_option("--at", o.at, "rational point");
  dyn->add_option("--target-err", o.target_err, "canonical height error target");
  dyn->add_option("--digit-cap", o.digit_cap, "largest iterate size in digits");
  dyn->add_option("--max-iter", o.max_iter, "orbit length limit");
  dyn->add_option("--deg-bound", o.deg_bound, "degree bound for g");
  dyn->add_option("--iterate-bound", o.iterate_bound, "iterate bound m");
  dyn->add_option("--curve", o.curve, "polynomial C(x, y)");
  dyn->add_option("--p", o.p_poly, "semiconjugacy p");
  dyn->add_option("--q", o.q_poly, "semiconjugacy q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(2, "usage", e.what());
  }

  try {
    const Config c = effective_config(o);
    if (lat->parsed()) run_lat(o);
    if (grp->parsed()) run_grp(o, c);
    if (deps->parsed()) run_deps(o, c);
    if (wit->parsed()) run_witness(o, c);
    if (sieve->parsed()) {
      if (o.op.empty()) o.op = "plain";
      run_sieve(o, c);
    }
    if (dyn->parsed()) run_dyn(o, c);
  } catch (const ParseError& e) {
    return fail(2, "parse", e.what());
  } catch (const DomainError& e) {
    return fail(3, "domain", e.what());
  }
  return 0;
}
