#include "torus/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "torus/error.hpp"

namespace torus::io {

Json to_json(const Int& n) { return n.get_str(); }

Json to_json(const Rat& q) { return torus::to_string(q); }

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const std::vector<IntVector>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

Json to_json(const CycloRational& c) { return c.to_string(); }

Json to_json(const TorusPoint& p) {
  Json out = Json::array();
  for (const auto& c : p.coords) out.push_back(to_json(c));
  return out;
}

Json to_json(const Lattice& l) {
  return Json{{"ambient", l.ambient()}, {"rank", l.rank()}, {"basis", to_json(l.basis())}};
}

Json to_json(const AlgebraicSubgroup& h) {
  return Json{{"ambient", h.ambient()},
              {"basis", to_json(h.lattice().basis())},
              {"dimension", h.dimension()},
              {"codimension", h.codimension()},
              {"connected", h.connected()},
              {"components", to_json(h.component_count())}};
}

Json to_json(const GramDet& g) {
  return Json{{"gram_det", to_json(g.value)}, {"covolume", real(g.covolume())}};
}

Json to_json(const RatPoly& f) { return f.to_string("x"); }

Json real(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0 ? 0.0 : r;
}

Json to_json(const GroupDecomposition& d) {
  Json gens = Json::array();
  for (std::size_t j = 0; j < d.rank(); ++j)
    gens.push_back(Json{{"value", to_json(d.generators[j])},
                        {"height", real(d.generators[j].weil_height())}});
  Json torsion = Json::array();
  for (const auto& t : d.torsion_parts) torsion.push_back(to_json(t));
  return Json{{"rank", d.rank()},
              {"primes", to_json(IntVector(d.primes.begin(), d.primes.end()))},
              {"generators", gens},
              {"exponent_matrix", to_json(d.exponent_matrix)},
              {"torsion", torsion}};
}

Json to_json(const GammaDecomposition& d) {
  return Json{{"gamma_exponents", to_json(d.gamma_exponents)},
              {"residual", to_json(d.residual)},
              {"residual_independent", d.residual_independent}};
}

Json to_json(const WitnessResult& w) {
  Json out{{"status", to_string(w.status)},
           {"m", to_json(w.m)},
           {"m_perp", to_json(w.m_perp)}};
  if (w.witness) {
    const auto& x = *w.witness;
    out["witness"] = Json{{"subgroup", to_json(x.subgroup)},
                          {"basis", to_json(x.basis)},
                          {"basis_bound", to_json(x.basis_bound)},
                          {"det_l", to_json(x.det_l)},
                          {"det_m_perp", to_json(x.det_m_perp)},
                          {"det_m", to_json(x.det_m)},
                          {"bound_ratio", real(x.bound_ratio())},
                          {"stage", x.stage}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const Intersection& r) {
  Json pts = Json::array();
  for (const auto& p : r.points) pts.push_back(to_json(p));
  Json cosets = Json::array();
  for (const auto& c : r.contained_cosets) cosets.push_back(to_json(c));
  return Json{{"points", pts}, {"residual_roots", r.residual_roots}, {"contained_cosets", cosets}};
}

Json to_json(const SieveReport& r) {
  Json pts = Json::array();
  for (const auto& p : r.points) {
    Json e{{"point", to_json(p.point)},
           {"height", real(p.height)},
           {"subgroup", to_json(p.subgroup.lattice().basis())}};
    if (p.translation) {
      e["translation"] = to_json(*p.translation);
      e["gamma_exponents"] = to_json(p.gamma_exponents);
    }
    pts.push_back(std::move(e));
  }
  Json anomalies = Json::array();
  for (const auto& a : r.anomalies)
    anomalies.push_back(
        Json{{"subgroup", to_json(a.subgroup.lattice().basis())}, {"coset", to_json(a.coset)}});
  Json out{{"points", pts},
           {"count", r.points.size()},
           {"max_height", real(r.max_height)},
           {"height_bound", r.height_bound ? real(*r.height_bound) : Json(nullptr)},
           {"height_bound_ok", r.height_bound_ok},
           {"contained_in_subgroup", anomalies},
           {"subgroups_examined", r.subgroups_examined},
           {"translations", r.translations},
           {"residual_roots", r.residual_roots}};
  return out;
}

Json to_json(const DivisorTable& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.support.size(); ++i)
    rows.push_back(Json{{"point", t.support[i].label()},
                        {"degree", t.support[i].degree},
                        {"orders", to_json(t.orders.row(i))}});
  return rows;
}

Json to_json(const CosetContainment& c) {
  return Json{{"character", to_json(c.character)},
              {"constant", to_json(c.constant)},
              {"kernel", to_json(c.kernel.basis())}};
}

Json to_json(const CharacterSearch& s) {
  Json chars = Json::array();
  for (const auto& c : s.characters)
    chars.push_back(Json{{"character", to_json(c.character)},
                         {"multiplicity", to_json(c.multiplicity)},
                         {"y", s.table.support[c.y].label()},
                         {"z", s.table.support[c.z].label()}});
  Json out{{"divisor_table", to_json(s.table)},
           {"characters", chars},
           {"degenerate", to_json(s.degenerate)}};
  if (!s.degenerate.empty()) out["box_bound"] = s.box_bound;
  return out;
}

Json to_json(const CanonicalHeightEstimate& e) {
  return Json{{"value", real(e.value)},
              {"iterations", e.iterations},
              {"error_bound", real(e.error_bound)},
              {"constant", real(e.constant)}};
}

Json to_json(const Classification& c) {
  Json out{{"class", to_string(c.kind)}};
  if (c.sigma) {
    const auto& s = *c.sigma;
    out["sigma"] = Json{{"shift", to_json(s.shift)},
                        {"alpha", s.alpha ? to_json(*s.alpha) : Json(nullptr)},
                        {"alpha_squared", s.alpha_squared ? to_json(*s.alpha_squared) : Json(nullptr)},
                        {"alpha_power", s.alpha_power},
                        {"alpha_power_value", to_json(s.alpha_power_value)},
                        {"target", to_json(s.target)}};
  }
  return out;
}

namespace {

Json points_json(const std::vector<PeriodicCurvePoint>& pts) {
  Json out = Json::array();
  for (const auto& p : pts)
    out.push_back(Json{{"x", to_json(p.x)}, {"y", to_json(p.y)}, {"height", real(p.height)}});
  return out;
}

}  // namespace

Json to_json(const PeriodicIntersectionReport& r) {
  Json graphs = Json::array();
  for (const auto& g : r.graphs)
    graphs.push_back(Json{{"g", to_json(g.g)},
                          {"degree", g.g.degree()},
                          {"contained", g.contained},
                          {"points", points_json(g.points)},
                          {"residual", g.residual}});
  Json verticals = Json::array();
  for (const auto& v : r.verticals)
    verticals.push_back(Json{{"zeta", to_json(v.zeta)},
                             {"contained", v.contained},
                             {"points", points_json(v.points)},
                             {"residual", v.residual}});
  Json periodic = Json::array();
  for (const auto& z : r.periodic) periodic.push_back(to_json(z));
  return Json{{"graphs", graphs},
              {"verticals", verticals},
              {"periodic", periodic},
              {"max_periodic_height", real(r.max_periodic_height)},
              {"max_point_height", real(r.max_point_height)}};
}

namespace {

Int int_of(const Json& j) {
  if (j.is_number_integer()) return Int(j.dump());
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw ParseError("expected an integer, got " + j.dump());
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON '" + text + "'");
  }
}

}  // namespace

IntMatrix parse_int_matrix(const std::string& text, std::size_t ambient) {
  const Json j = parse_json(text);
  if (!j.is_array()) throw ParseError("expected a list of rows");
  std::vector<IntVector> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw ParseError("expected a list of rows");
    IntVector v;
    for (const auto& x : r) v.push_back(int_of(x));
    rows.push_back(std::move(v));
  }
  std::size_t cols = rows.empty() ? ambient : rows.front().size();
  if (ambient && cols != ambient) throw ParseError("rows must have length " + std::to_string(ambient));
  for (const auto& r : rows)
    if (r.size() != cols) throw ParseError("rows have different lengths");
  if (cols == 0) throw ParseError("cannot infer the ambient dimension of an empty basis");
  return IntMatrix::from_rows(rows, cols);
}

IntVector parse_int_vector(const std::string& text) {
  const Json j = parse_json(text);
  if (!j.is_array()) throw ParseError("expected a list of integers");
  IntVector v;
  for (const auto& x : j) v.push_back(int_of(x));
  return v;
}

GammaGroup parse_gamma(const std::string& text, std::size_t ambient, std::uint64_t trial_bound) {
  GammaGroup g;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    const std::string part = text.substr(start, semi == std::string::npos ? std::string::npos
                                                                        : semi - start);
    std::vector<CycloRational> gens;
    std::size_t s = 0;
    while (part.find_first_not_of(" \t") != std::string::npos && s <= part.size()) {
      const auto comma = part.find(',', s);
      gens.push_back(parse_cyclo(part.substr(s, comma == std::string::npos ? std::string::npos
                                                                         : comma - s),
                                 trial_bound));
      if (comma == std::string::npos) break;
      s = comma + 1;
    }
    g.generators.push_back(std::move(gens));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (g.generators.size() != ambient)
    throw ParseError("gamma needs " + std::to_string(ambient) + " ';'-separated generator lists");
  return g;
}

}  // namespace torus::io
