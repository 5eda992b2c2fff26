#include "qtors/torsion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qtors/factor.hpp"

namespace qtors {

const QPoly& TorsionContext::psi(int n) {
  auto it = psi_.find(n);
  if (it == psi_.end()) it = psi_.emplace(n, division_polynomial(E_, n)).first;
  return it->second;
}

const std::vector<QPoly>& TorsionContext::psi_factors(int n) {
  auto it = factors_.find(n);
  if (it == factors_.end()) it = factors_.emplace(n, bounded_factors(psi(n), 4)).first;
  return it->second;
}

std::set<int> required_prime_powers(const GroupSet& groups) {
  std::set<int> orders;
  for (const auto& H : groups) {
    auto o = element_orders(H);
    orders.insert(o.begin(), o.end());
  }
  std::map<int, int> best;
  for (int o : orders) {
    int m = o;
    for (int p = 2; p <= m; ++p) {
      if (m % p != 0) continue;
      int pp = 1;
      while (m % p == 0) {
        m /= p;
        pp *= p;
      }
      best[p] = std::max(best[p], pp);
    }
  }
  std::set<int> out;
  for (auto& [p, pp] : best)
    if (pp > 1) out.insert(pp);
  return out;
}

namespace {

const std::set<int>& exhaustive_prime_powers() {
  static const std::set<int> s = {16, 9, 5, 7, 11, 13, 17, 19, 23};
  return s;
}

std::vector<Rat> point_key(const CurvePoint<Rat>& P) {
  if (P.is_infinity()) return {};
  return {P.x(), P.y()};
}

std::vector<Rat> point_key(const CurvePoint<NFElem>& P) {
  if (P.is_infinity()) return {};
  std::vector<Rat> k = P.x().coords();
  const auto& yk = P.y().coords();
  k.insert(k.end(), yk.begin(), yk.end());
  return k;
}

template <class F>
struct Assembled {
  TorsionStructure structure;
  std::vector<CurvePoint<F>> points;  // the full group, infinity first
};

// close under addition and read off C_a x C_b by the order-counting test
template <class F>
Assembled<F> assemble_group(const EllipticCurve<F>& E, const std::vector<CurvePoint<F>>& found,
                            size_t cap) {
  std::vector<CurvePoint<F>> pts;
  std::set<std::vector<Rat>> seen;
  auto push = [&](const CurvePoint<F>& P) {
    if (seen.insert(point_key(P)).second) pts.push_back(P);
  };
  push(CurvePoint<F>::infinity());
  for (const auto& P : found) push(P);
  bool grew = true;
  while (grew) {
    grew = false;
    size_t n = pts.size();
    if (n > cap) throw std::logic_error("torsion closure exceeded the size cap");
    for (size_t i = 1; i < n; ++i)
      for (size_t j = i; j < n; ++j) {
        CurvePoint<F> R = add(E, pts[i], pts[j]);
        if (seen.insert(point_key(R)).second) {
          pts.push_back(R);
          grew = true;
        }
      }
  }

  int N = (int)pts.size();
  std::vector<int> ords(pts.size());
  int b = 1;
  for (size_t i = 0; i < pts.size(); ++i) {
    auto o = exact_order(E, pts[i], 64);
    if (!o) throw std::logic_error("torsion point order exceeded the bound");
    ords[i] = *o;
    b = std::max(b, *o);
  }
  if (N % b != 0) throw std::logic_error("group size not divisible by the exponent");
  int a = N / b;
  if (a < 1 || b % a != 0) throw std::logic_error("inconsistent torsion group shape");
  // counting test: #{P : dP = 0} = gcd(d,a) * gcd(d,b) for every d | b
  for (int d = 1; d <= b; ++d) {
    if (b % d != 0) continue;
    int cnt = 0;
    for (int o : ords)
      if (d % o == 0) ++cnt;
    if (cnt != std::gcd(d, a) * std::gcd(d, b))
      throw std::logic_error("order-counting test failed; group law inconsistency");
  }
  return {TorsionStructure(a, b), std::move(pts)};
}

// all K-points whose order divides one of the given prime powers
std::vector<CurvePoint<NFElem>> collect_points(const EllipticCurve<Rat>& E,
                                               const EllipticCurve<NFElem>& EK,
                                               const NumberField::Ptr& K,
                                               const std::set<int>& powers,
                                               TorsionContext& ctx) {
  std::vector<CurvePoint<NFElem>> out;
  QPoly T = two_torsion_poly(E);
  int d = K->degree();
  for (int q : powers) {
    for (const QPoly& g : ctx.psi_factors(q)) {
      if (g.degree() > d || (g.degree() > 1 && d % g.degree() != 0)) continue;
      for (const NFElem& x : roots_in_field(g, K)) {
        NFElem delta = eval_poly(T, x);
        NFElem lin = EK.a1() * x + EK.a3();
        if (delta.is_zero()) {
          out.emplace_back(EK, x, Rat(-1, 2) * lin);
        } else if (auto s = element_sqrt(delta)) {
          out.emplace_back(EK, x, Rat(1, 2) * (*s - lin));
          out.emplace_back(EK, x, Rat(1, 2) * (-*s - lin));
        }
      }
    }
  }
  return out;
}

RationalTorsion compute_rational_torsion(const EllipticCurve<Rat>& E, TorsionContext& ctx) {
  std::vector<CurvePoint<Rat>> found;
  QPoly T = two_torsion_poly(E);
  for (int q : {8, 9, 5, 7}) {
    for (const QPoly& g : ctx.psi_factors(q)) {
      if (g.degree() != 1) continue;
      Rat x0 = -g[0] / g[1];
      Rat delta = T.eval(x0);
      Rat lin = E.a1() * x0 + E.a3();
      if (delta == 0) {
        found.emplace_back(E, x0, Rat(-1, 2) * lin);
      } else if (auto s = sqrt_exact(delta)) {
        found.emplace_back(E, x0, (*s - lin) / 2);
        found.emplace_back(E, x0, (-*s - lin) / 2);
      }
    }
  }
  auto grp = assemble_group(E, found, 64);
  const auto& mazur = tables::rational_groups();
  if (std::find(mazur.begin(), mazur.end(), grp.structure) == mazur.end())
    throw std::logic_error("rational torsion outside the classified list: " +
                           grp.structure.name());

  // generators: a point of maximal order, plus an independent 2-torsion point
  // for the C2 x C2m shapes
  std::vector<CurvePoint<Rat>> gens;
  const auto& pts = grp.points;
  for (const auto& P : pts) {
    if (exact_order(E, P, 64) == std::optional<int>(grp.structure.b)) {
      gens.push_back(P);
      break;
    }
  }
  if (grp.structure.a > 1 && !gens.empty()) {
    std::set<std::vector<Rat>> in_span;
    CurvePoint<Rat> R = CurvePoint<Rat>::infinity();
    for (int k = 0; k < grp.structure.b; ++k) {
      in_span.insert(point_key(R));
      R = add(E, R, gens[0]);
    }
    for (const auto& P : pts) {
      if (in_span.count(point_key(P))) continue;
      if (exact_order(E, P, 64) == std::optional<int>(grp.structure.a)) {
        gens.push_back(P);
        break;
      }
    }
  }
  return {grp.structure, std::move(gens)};
}

}  // namespace

RationalTorsion torsion_over_Q(const EllipticCurve<Rat>& E) {
  TorsionContext ctx(E);
  return compute_rational_torsion(E, ctx);
}

FieldTorsion torsion_over_K(const EllipticCurve<Rat>& E, const NumberField::Ptr& K,
                            SearchMode mode, TorsionContext* ctx) {
  TorsionContext local(E);
  TorsionContext& c = ctx ? *ctx : local;
  RationalTorsion base = compute_rational_torsion(E, c);

  std::set<int> powers;
  if (mode == SearchMode::kClassified) {
    powers = required_prime_powers(tables::quartic_star_groups_for(base.structure));
  } else {
    powers = exhaustive_prime_powers();
  }

  EllipticCurve<NFElem> EK = base_change(E, K);
  auto found = collect_points(E, EK, K, powers, c);
  auto grp = assemble_group(EK, found, 64);

  if (!subgroup_of(base.structure, grp.structure))
    throw std::logic_error("field torsion does not contain the rational torsion");
  if (mode == SearchMode::kClassified &&
      !tables::quartic_star_groups_for(base.structure).count(grp.structure))
    throw SporadicCandidateError(
        "torsion " + grp.structure.name() + " over " + K->min_poly_str() +
            " falls outside the classified candidates for G = " + base.structure.name(),
        grp.structure);
  return {grp.structure, std::move(grp.points)};
}

namespace {

// monic integral min poly for the field generated by a root of g
QPoly monicize(const QPoly& g) {
  Rat lc = g.leading();
  int n = g.degree();
  std::vector<Rat> c(n + 1);
  Rat s = Rat(1) / lc;
  for (int i = n; i >= 0; --i) {
    c[i] = g[i] * s;
    s *= lc;
  }
  return QPoly(std::move(c));
}

struct TorsionCache {
  const EllipticCurve<Rat>& E;
  SearchMode mode;
  TorsionContext& ctx;
  std::vector<std::pair<NumberField::Ptr, TorsionStructure>> known;

  TorsionStructure get(const NumberField::Ptr& K) {
    for (auto& [F, H] : known)
      if (F->degree() == K->degree() && is_isomorphic(K, F)) return H;
    TorsionStructure H = torsion_over_K(E, K, mode, &ctx).structure;
    known.emplace_back(K, H);
    return H;
  }
};

}  // namespace

GrowthResult growth_fields(const EllipticCurve<Rat>& E, SearchMode mode) {
  TorsionContext ctx(E);
  RationalTorsion base = compute_rational_torsion(E, ctx);

  std::set<int> powers;
  if (mode == SearchMode::kClassified)
    powers = required_prime_powers(tables::quartic_star_groups_for(base.structure));
  else
    powers = exhaustive_prime_powers();

  GrowthResult result;
  result.base = base.structure;
  for (int q : powers) result.factors[q] = ctx.psi_factors(q);

  QPoly T = two_torsion_poly(E);
  std::vector<NumberField::Ptr> fields;
  auto push_field = [&](const NumberField::Ptr& K) {
    if (!K || K->degree() < 2 || K->degree() > 4) return;
    for (auto& F : fields)
      if (is_isomorphic(K, F)) return;
    fields.push_back(K);
  };

  for (int q : powers) {
    for (const QPoly& g : ctx.psi_factors(q)) {
      int dg = g.degree();
      if (dg != 1 && dg != 2 && dg != 4) continue;
      NumberField::Ptr Kx;
      NFElem x;
      if (dg == 1) {
        Kx = NumberField::rationals();
        x = Kx->from_rational(-g[0] / g[1]);
      } else {
        Kx = NumberField::create(monicize(g));
        x = Rat(1) / g.leading() * Kx->generator();
      }
      NFElem delta = eval_poly(T, x);
      NumberField::Ptr Kxy;
      if (delta.is_zero() || element_sqrt(delta).has_value()) {
        Kxy = Kx;
      } else if (dg == 1) {
        Kxy = NumberField::quadratic(delta.rational_value());
      } else if (dg == 2) {
        QPoly mu = minimal_polynomial(delta);
        if (mu.degree() == 1) {
          auto comp = compositum(Kx, NumberField::quadratic(-mu[0]), 4);
          Kxy = comp.empty() ? nullptr : comp.front();
        } else {
          Kxy = NumberField::create(subst_power(mu, 2));
        }
      }  // dg == 4 with no square root: the point lives in degree 8, skip
      push_field(Kx);
      push_field(Kxy);
    }
  }

  // close under compositum of degree <= 4
  for (size_t i = 0; i < fields.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      for (const auto& C : compositum(fields[i], fields[j], 4)) push_field(C);
    }
  }

  TorsionCache cache{E, mode, ctx, {}};
  cache.known.emplace_back(NumberField::rationals(), base.structure);

  for (const auto& K : fields) {
    TorsionStructure H = cache.get(K);
    if (H == base.structure) continue;
    if (!subgroup_of(base.structure, H))
      throw std::logic_error("growth produced a non-supergroup");
    bool minimal = true;
    if (K->degree() == 4) {
      for (const auto& F : quadratic_subfields(K)) {
        if (cache.get(F) == H) {
          minimal = false;
          break;
        }
      }
    }
    result.entries.push_back({K, H, minimal});
  }

  std::sort(result.entries.begin(), result.entries.end(),
            [](const GrowthEntry& a, const GrowthEntry& b) {
              if (a.field->degree() != b.field->degree())
                return a.field->degree() < b.field->degree();
              if (a.structure != b.structure) return a.structure < b.structure;
              const auto& ca = a.field->min_poly().coeffs();
              const auto& cb = b.field->min_poly().coeffs();
              return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
            });
  return result;
}

}  // namespace qtors
