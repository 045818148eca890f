#include "torus/curve.hpp"

#include <algorithm>

#include "expr_parser.hpp"
#include "torus/error.hpp"

namespace torus {

RatFunc::RatFunc(RatPoly num, RatPoly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  const RatPoly g = gcd(num, den);
  num = divmod(num, g).first;
  den = divmod(den, g).first;
  const Rat lc = den.leading();
  num_ = Rat(1) / lc * num;
  den_ = Rat(1) / lc * den;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DomainError("division by the zero function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RatFunc RatFunc::pow(long k) const {
  if (k < 0) return (RatFunc::constant(1) / *this).pow(-k);
  return {num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k))};
}

std::string RatFunc::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

namespace {

struct FuncRing {
  RatFunc f;
  static FuncRing constant(const Rat& c) { return {RatFunc::constant(c)}; }
  friend FuncRing operator+(const FuncRing& a, const FuncRing& b) { return {a.f + b.f}; }
  friend FuncRing operator-(const FuncRing& a, const FuncRing& b) { return {a.f - b.f}; }
  friend FuncRing operator*(const FuncRing& a, const FuncRing& b) { return {a.f * b.f}; }
  static FuncRing divide(const FuncRing& a, const FuncRing& b) {
    if (b.f.is_zero()) throw ParseError("division by zero");
    return {a.f / b.f};
  }
  static FuncRing power(const FuncRing& a, long k) {
    if (a.f.is_zero() && k <= 0) throw ParseError("zero to a non-positive power");
    return {a.f.pow(k)};
  }
};

// Splits on commas outside parentheses.
std::vector<std::string> split_top(const std::string& text) {
  std::vector<std::string> parts(1);
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0)
      parts.emplace_back();
    else
      parts.back() += c;
  }
  return parts;
}

std::string strip_outer_parens(const std::string& text) {
  const auto b = text.find_first_not_of(" \t");
  const auto e = text.find_last_not_of(" \t");
  if (b == std::string::npos) return text;
  if (text[b] != '(' || text[e] != ')') return text;
  int depth = 0;
  for (std::size_t i = b; i <= e; ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (depth == 0 && i < e) return text;  // the first paren closes early
  }
  return text.substr(b + 1, e - b - 1);
}

}  // namespace

RatFunc parse_ratfunc(const std::string& text, const std::string& var) {
  detail::ExprParser<FuncRing> parser(text, [&](const std::string& name) {
    if (name != var) throw ParseError("unknown variable '" + name + "' (expected " + var + ")");
    return FuncRing{RatFunc(RatPoly::x(), RatPoly::constant(1))};
  });
  return parser.parse().f;
}

std::string ParamCurve::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i)
    out += (i ? ", " : "") + coords[i].to_string();
  return out + ")";
}

ParamCurve parse_curve(const std::string& text) {
  ParamCurve c;
  const std::string inner = strip_outer_parens(text);
  const auto parts = split_top(inner);
  // a single parenthesised coordinate such as "(t)" is still one coordinate
  for (const auto& part : parts) {
    RatFunc f = parse_ratfunc(part);
    if (f.is_zero()) throw DomainError("coordinate function '" + part + "' is zero");
    c.coords.push_back(std::move(f));
  }
  return c;
}

std::string SupportPoint::label() const {
  switch (kind) {
    case Kind::zero:
      return "0";
    case Kind::model:
      return value->to_string();
    case Kind::atom:
      return "root of " + atom.to_string("t");
    case Kind::infinity:
      return "inf";
  }
  return "";
}

bool SupportPoint::is_rational() const {
  if (kind == Kind::zero || kind == Kind::infinity) return true;
  return kind == Kind::model && value->torsion_order() <= 2;
}

IntVector DivisorTable::column_degrees() const {
  IntVector out(orders.cols(), 0);
  for (std::size_t i = 0; i < support.size(); ++i)
    for (std::size_t j = 0; j < orders.cols(); ++j)
      out[j] += orders(i, j) * static_cast<unsigned long>(support[i].degree);
  return out;
}

namespace {

struct Factored {
  std::size_t zero = 0;
  std::vector<ModelRoot> roots;
  RatPoly residual;
};

Factored factor_poly(const RatPoly& p, std::uint64_t bound) {
  Factored f;
  if (p.degree() < 1) {
    f.residual = RatPoly::constant(1);
    return f;
  }
  ModelRootReport rep = model_roots(p, bound);
  f.zero = rep.zero_multiplicity;
  f.roots = std::move(rep.roots);
  f.residual = rep.residual.monic();
  return f;
}

// Pairwise coprime squarefree polynomials whose products give every input's
// squarefree part.
std::vector<RatPoly> coprime_base(const std::vector<RatPoly>& polys) {
  std::vector<RatPoly> base;
  for (const auto& p : polys) {
    if (p.degree() < 1) continue;
    RatPoly sq = divmod(p, gcd(p, p.derivative())).first.monic();
    base.push_back(sq);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < base.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        const RatPoly g = gcd(base[i], base[j]);
        if (g.degree() < 1) continue;
        const RatPoly a = divmod(base[i], g).first;
        const RatPoly b = divmod(base[j], g).first;
        base.erase(base.begin() + static_cast<long>(j));
        base.erase(base.begin() + static_cast<long>(i));
        for (const auto& x : {a, b, g})
          if (x.degree() >= 1) base.push_back(x.monic());
        changed = true;
      }
    }
  }
  std::sort(base.begin(), base.end(), [](const RatPoly& a, const RatPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.to_string() < b.to_string();
  });
  base.erase(std::unique(base.begin(), base.end()), base.end());
  return base;
}

long multiplicity_in(RatPoly p, const RatPoly& atom) {
  long m = 0;
  while (p.degree() >= atom.degree()) {
    auto [q, r] = divmod(p, atom);
    if (!r.is_zero()) break;
    p = std::move(q);
    ++m;
  }
  return m;
}

}  // namespace

DivisorTable divisor_table(const ParamCurve& c, std::uint64_t trial_bound) {
  const std::size_t n = c.ambient();
  std::vector<Factored> nums, dens;
  std::map<CycloRational, bool> model_points;
  bool has_zero = false;
  std::vector<RatPoly> residuals;
  for (const auto& f : c.coords) {
    nums.push_back(factor_poly(f.num(), trial_bound));
    dens.push_back(factor_poly(f.den(), trial_bound));
    for (const auto* fac : {&nums.back(), &dens.back()}) {
      has_zero = has_zero || fac->zero > 0;
      for (const auto& r : fac->roots) model_points[r.root] = true;
      residuals.push_back(fac->residual);
    }
  }
  const auto atoms = coprime_base(residuals);

  DivisorTable t;
  if (has_zero) t.support.push_back({SupportPoint::Kind::zero, std::nullopt, {}, 1});
  for (const auto& [v, unused] : model_points)
    t.support.push_back({SupportPoint::Kind::model, v, {}, 1});
  for (const auto& a : atoms)
    t.support.push_back({SupportPoint::Kind::atom, std::nullopt, a,
                         static_cast<std::size_t>(a.degree())});
  t.support.push_back({SupportPoint::Kind::infinity, std::nullopt, {}, 1});

  t.orders = IntMatrix(t.support.size(), n);
  auto order_in = [&](const Factored& fac, const SupportPoint& s) -> long {
    switch (s.kind) {
      case SupportPoint::Kind::zero:
        return static_cast<long>(fac.zero);
      case SupportPoint::Kind::model:
        for (const auto& r : fac.roots)
          if (r.root == *s.value) return r.multiplicity;
        return 0;
      case SupportPoint::Kind::atom:
        return multiplicity_in(fac.residual, s.atom);
      case SupportPoint::Kind::infinity:
        return 0;
    }
    return 0;
  };
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i + 1 < t.support.size(); ++i)
      t.orders(i, j) = order_in(nums[j], t.support[i]) - order_in(dens[j], t.support[i]);
    t.orders(t.support.size() - 1, j) = c.coords[j].den().degree() - c.coords[j].num().degree();
  }
  for (const auto& d : t.column_degrees())
    if (d != 0) throw DomainError("divisor of a coordinate function does not have degree zero");
  return t;
}

Rat character_constant(const ParamCurve& c, const IntVector& a) {
  Rat out = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rat lc = c.coords[i].num().leading() / c.coords[i].den().leading();
    Rat base = a[i] < 0 ? Rat(1 / lc) : lc;
    Rat pw = 1;
    for (Int k = 0; k < abs(a[i]); ++k) pw *= base;
    out *= pw;
  }
  return out;
}

namespace {

void normalize_sign(IntVector& v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    return;
  }
}

Lattice kernel_of_rows(const IntMatrix& m, const std::vector<std::size_t>& rows) {
  std::vector<IntVector> r;
  for (auto i : rows) r.push_back(m.row(i));
  return orthogonal(Lattice::span(m.cols(), r));
}

IntVector image(const IntMatrix& d, const IntVector& a) {
  IntVector out(d.rows(), 0);
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) out[i] += d(i, j) * a[j];
  return out;
}

}  // namespace

std::optional<CosetContainment> coset_containment(const ParamCurve& c) {
  const DivisorTable t = divisor_table(c);
  std::vector<std::size_t> all(t.support.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  Lattice k = kernel_of_rows(t.orders, all);
  if (k.rank() == 0) return std::nullopt;
  IntVector a = reduced_basis(k).basis.front();
  normalize_sign(a);
  const Rat constant = character_constant(c, a);
  return CosetContainment{std::move(k), std::move(a), constant};
}

CharacterSearch find_primitive_characters(const ParamCurve& c, long box_bound) {
  CharacterSearch out;
  out.table = divisor_table(c);
  const auto& d = out.table.orders;
  const std::size_t rows = d.rows();
  const std::size_t n = c.ambient();

  std::vector<std::size_t> all(rows);
  for (std::size_t i = 0; i < rows; ++i) all[i] = i;
  const Lattice constants = kernel_of_rows(d, all);
  for (auto v : constants.basis_vectors()) {
    normalize_sign(v);
    out.degenerate.push_back(v);
  }

  auto record = [&](IntVector a) {
    normalize_sign(a);
    const IntVector div = image(d, a);
    std::vector<std::size_t> supp;
    for (std::size_t i = 0; i < rows; ++i)
      if (div[i] != 0) supp.push_back(i);
    if (supp.size() != 2) return;
    if (out.table.support[supp[0]].degree != 1 || out.table.support[supp[1]].degree != 1) return;
    PrimitiveCharacter pc{a, abs(div[supp[0]]), supp[0], supp[1]};
    if (div[supp[0]] < 0) std::swap(pc.y, pc.z);
    for (const auto& seen : out.characters)
      if (seen.character == pc.character) return;
    out.characters.push_back(std::move(pc));
  };

  if (constants.rank() == 0) {
    for (std::size_t y = 0; y < rows; ++y) {
      for (std::size_t z = y + 1; z < rows; ++z) {
        std::vector<std::size_t> others;
        for (std::size_t i = 0; i < rows; ++i)
          if (i != y && i != z) others.push_back(i);
        const Lattice k = kernel_of_rows(d, others);
        for (const auto& a : k.basis_vectors()) record(a);
      }
    }
    return out;
  }

  out.box_bound = box_bound;
  IntVector a(n, -box_bound);
  while (true) {
    if (gcd_of(a) == 1) record(a);
    std::size_t i = 0;
    while (i < n && ++a[i] > box_bound) a[i++] = -box_bound;
    if (i == n) break;
  }
  std::sort(out.characters.begin(), out.characters.end(),
            [](const PrimitiveCharacter& x, const PrimitiveCharacter& y) {
              if (x.y != y.y) return x.y < y.y;
              if (x.z != y.z) return x.z < y.z;
              return x.character < y.character;
            });
  return out;
}

}  // namespace torus
