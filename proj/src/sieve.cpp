#include "torus/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "torus/cyclotomic.hpp"
#include "torus/error.hpp"

namespace torus {

namespace {

// Dense coefficients (low to high) of a one-parameter pull-back.
std::vector<CycloSum> dense(const std::map<Exponent, CycloSum>& sparse) {
  const long lo = sparse.begin()->first[0];
  const long hi = sparse.rbegin()->first[0];
  std::vector<CycloSum> out(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, c] : sparse) out[static_cast<std::size_t>(e[0] - lo)] = c;
  return out;
}

TorusPoint point_on_component(const TorusPoint& shift, const IntMatrix& e, const CycloRational& t) {
  TorusPoint p = shift;
  for (std::size_t i = 0; i < p.ambient(); ++i) p.coords[i] = p.coords[i] * t.pow(e(i, 0));
  return p;
}

}  // namespace

Intersection intersect_curve_subgroup(const LaurentSystem& x, const AlgebraicSubgroup& h,
                                      const std::optional<TorusPoint>& translation) {
  if (h.ambient() != x.ambient) throw DomainError("subgroup and variety live in different tori");
  if (h.dimension() > 1) throw DomainError("intersection needs a subgroup of dimension at most 1");
  Intersection out;
  std::set<TorusPoint> points;
  const IntMatrix e = parametrize(h).exponents;
  for (TorusPoint shift : coset_representatives(h)) {
    if (translation) shift = shift * *translation;
    if (h.dimension() == 0) {
      if (x.vanishes_at(shift)) points.insert(shift);
      continue;
    }
    std::vector<std::map<Exponent, CycloSum>> pulled;
    for (const auto& f : x.equations) pulled.push_back(f.substitute(e, shift));
    const auto first = std::find_if(pulled.begin(), pulled.end(),
                                    [](const auto& m) { return !m.empty(); });
    if (first == pulled.end()) {
      out.contained_cosets.push_back(shift);
      continue;
    }
    const ModelRootReport rep = cyclo_poly_roots(dense(*first));
    out.residual_roots += rep.residual_degree;
    for (const auto& r : rep.roots) {
      TorusPoint p = point_on_component(shift, e, r.root);
      if (x.vanishes_at(p)) points.insert(std::move(p));
    }
  }
  out.points.assign(points.begin(), points.end());
  return out;
}

namespace {

struct Task {
  const AlgebraicSubgroup* subgroup;
  const std::optional<TorusPoint>* translation;
  std::size_t gamma_index;
};

std::vector<Intersection> run_tasks(const LaurentSystem& x, const std::vector<Task>& tasks,
                                    unsigned workers) {
  std::vector<Intersection> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(tasks.size());
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = intersect_curve_subgroup(x, *tasks[i].subgroup, *tasks[i].translation);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, workers);
  if (n == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < n; ++k) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

std::vector<AlgebraicSubgroup> stream(const LaurentSystem& x, const SieveOptions& opt) {
  if (opt.codim + 1 < x.ambient)
    throw DomainError("the sieve needs codimension at least ambient - 1");
  std::vector<AlgebraicSubgroup> out;
  for_each_subgroup(x.ambient, opt.codim, opt.bound, opt.connected_only,
                    [&](const AlgebraicSubgroup& h) { out.push_back(h); });
  return out;
}

struct Translate {
  std::optional<TorusPoint> point;
  IntVector exponents;
};

SieveReport sieve(const LaurentSystem& x, const SieveOptions& opt,
                  const std::vector<Translate>& translates) {
  const auto subgroups = stream(x, opt);
  std::vector<Task> tasks;
  for (std::size_t g = 0; g < translates.size(); ++g)
    for (const auto& h : subgroups) tasks.push_back({&h, &translates[g].point, g});
  const auto results = run_tasks(x, tasks, opt.workers);

  SieveReport rep;
  rep.subgroups_examined = subgroups.size();
  rep.translations = translates.size();
  rep.height_bound = opt.height_bound;
  std::map<TorusPoint, SievePoint> seen;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& r = results[i];
    rep.residual_roots += r.residual_roots;
    for (const auto& c : r.contained_cosets) rep.anomalies.push_back({*tasks[i].subgroup, c});
    for (const auto& p : r.points) {
      if (seen.count(p)) continue;
      const auto& t = translates[tasks[i].gamma_index];
      seen.emplace(p, SievePoint{p, *tasks[i].subgroup, t.point, t.exponents, p.max_height()});
    }
  }
  for (auto& [p, sp] : seen) {
    rep.max_height = std::max(rep.max_height, sp.height);
    rep.points.push_back(std::move(sp));
  }
  if (rep.height_bound) rep.height_bound_ok = rep.max_height <= *rep.height_bound;
  return rep;
}

}  // namespace

SieveReport abelian_point_sieve(const LaurentSystem& x, const SieveOptions& opt) {
  return sieve(x, opt, {Translate{}});
}

SieveReport gamma_enlarged_sieve(const LaurentSystem& x, const SieveOptions& opt,
                                 const GammaGroup& gamma, long gamma_exp_bound) {
  const std::size_t n = x.ambient;
  if (gamma.generators.size() != n) throw DomainError("gamma must list generators per coordinate");
  std::vector<CycloRational> flat;
  for (const auto& gs : gamma.generators)
    for (const auto& g : gs) {
      if (g.is_torsion()) throw DomainError("gamma generators must be non-torsion");
      flat.push_back(g);
    }
  std::vector<Translate> translates;
  std::set<TorusPoint> seen;
  IntVector e(flat.size(), -gamma_exp_bound);
  // exponent vectors ordered by max-norm so the identity comes first
  std::vector<IntVector> exps;
  while (true) {
    exps.push_back(e);
    std::size_t i = 0;
    while (i < e.size() && ++e[i] > gamma_exp_bound) e[i++] = -gamma_exp_bound;
    if (i == e.size()) break;
  }
  std::stable_sort(exps.begin(), exps.end(), [](const IntVector& a, const IntVector& b) {
    return max_abs(a) < max_abs(b);
  });
  for (const auto& v : exps) {
    TorusPoint t{std::vector<CycloRational>(n)};
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& g : gamma.generators[i]) t.coords[i] = t.coords[i] * g.pow(v[k++]);
    if (!seen.insert(t).second) continue;
    const bool identity = std::all_of(t.coords.begin(), t.coords.end(),
                                      [](const CycloRational& c) { return c.is_one(); });
    translates.push_back({identity ? std::nullopt : std::optional<TorusPoint>(t), v});
  }
  SieveReport rep = sieve(x, opt, translates);
  for (auto& sp : rep.points) {
    if (!sp.translation) sp.gamma_exponents.clear();
    const auto d = group_decomposition_mod_gamma(sp.point, gamma);
    for (const auto& ni : d.gamma_exponents)
      rep.max_gamma_exponent = std::max(rep.max_gamma_exponent, max_abs(ni));
    const auto& m = d.residual.exponent_matrix;
    if (m.rows() * m.cols() > 0) rep.max_residual_exponent = std::max(rep.max_residual_exponent, m.max_abs());
  }
  return rep;
}

const char* to_string(GateVerdict v) {
  switch (v) {
    case GateVerdict::zero_dimensional_ok:
      return "zero-dimensional-ok";
    case GateVerdict::anomalous_witness:
      return "anomalous-witness";
    case GateVerdict::positive_dimensional:
      return "positive-dimensional";
  }
  return "";
}

namespace {

// X is a curve; dim(X meet H) is 0 or 1.
GateResult verdict(std::size_t meet_dim, const AlgebraicSubgroup& h, std::size_t s) {
  GateResult g;
  g.intersection_dim = meet_dim;
  if (meet_dim == 0) return g;
  // anomalous when dim Y > s + dim H - n
  const long threshold = static_cast<long>(s + h.dimension()) - static_cast<long>(h.ambient());
  g.verdict = static_cast<long>(meet_dim) > threshold ? GateVerdict::anomalous_witness
                                                     : GateVerdict::positive_dimensional;
  return g;
}

}  // namespace

GateResult anomaly_gate(const LaurentSystem& x, const AlgebraicSubgroup& h, std::size_t s) {
  if (x.ambient != 2 || x.equations.size() != 1)
    throw DomainError("anomaly gate supports hypersurfaces in G_m^2 and parametrized curves");
  if (h.ambient() != 2) throw DomainError("subgroup and variety live in different tori");
  if (h.dimension() == 2) return verdict(1, h, s);
  return verdict(intersect_curve_subgroup(x, h).contained() ? 1 : 0, h, s);
}

GateResult anomaly_gate(const ParamCurve& c, const AlgebraicSubgroup& h, std::size_t s) {
  if (h.ambient() != c.ambient()) throw DomainError("subgroup and curve live in different tori");
  const DivisorTable t = divisor_table(c);
  bool inside = true;
  for (const auto& a : h.lattice().basis_vectors()) {
    for (std::size_t i = 0; i < t.orders.rows() && inside; ++i)
      inside = dot(t.orders.row(i), a) == 0;
    inside = inside && character_constant(c, a) == 1;
  }
  return verdict(inside ? 1 : 0, h, s);
}

}  // namespace torus
