#include "qtors/families.hpp"

#include <sstream>

#include "qtors/factor.hpp"
#include "qtors/torsion.hpp"

namespace qtors {

KubertCurve kubert_curve(KubertTarget target, const Rat& t) {
  Rat b, c;
  int want = 0;
  if (target == KubertTarget::kC10) {
    Rat den = t - (t - 1) * (t - 1);
    if (den == 0) throw std::invalid_argument("degenerate parameter: t - (t-1)^2 = 0");
    c = (2 * t * t * t - 3 * t * t + t) / den;
    b = c * t * t / den;
    want = 10;
  } else {
    Rat den = (t - 1) * (t - 1) * (t - 1);
    if (den == 0) throw std::invalid_argument("degenerate parameter: t = 1");
    c = (3 * t * t - 3 * t + 1) * (t - 2 * t * t) / den;
    b = c * (2 * t - 2 * t * t - 1) / (t - 1);
    want = 12;
  }
  EllipticCurve<Rat> E(1 - c, -b, -b, Rat(0), Rat(0));  // throws when singular
  CurvePoint<Rat> P(E, Rat(0), Rat(0));
  auto ord = exact_order(E, P, 36);
  if (!ord || *ord != want) {
    std::ostringstream os;
    os << "marked point has order " << (ord ? std::to_string(*ord) : std::string(">36"))
       << ", expected " << want;
    throw std::invalid_argument(os.str());
  }
  return {E, P, b, c};
}

namespace {

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

}  // namespace

HalvedPoint halve_point(const EllipticCurve<Rat>& E, const CurvePoint<Rat>& P) {
  if (P.is_infinity()) throw std::invalid_argument("cannot halve the point at infinity");
  auto N = exact_order(E, P, 36);
  if (!N) throw std::invalid_argument("point has infinite or very large order");

  // x([2]Q) = (x^4 - b4 x^2 - 2 b6 x - b8) / (4x^3 + b2 x^2 + 2 b4 x + b6)
  QPoly T = two_torsion_poly(E);
  QPoly num{-E.b8(), -2 * E.b6(), -E.b4(), Rat(0), Rat(1)};
  QPoly U = num - P.x() * T;

  QPoly Tpoly = T;
  for (const QPoly& g : bounded_factors(U, 4)) {
    int dg = g.degree();
    // assemble the candidate quartic fields attached to this factor
    std::vector<NumberField::Ptr> cands;
    NumberField::Ptr Kx;
    NFElem x0;
    if (dg == 1) {
      Kx = NumberField::rationals();
      x0 = Kx->from_rational(-g[0] / g[1]);
    } else if (dg == 2 || dg == 4) {
      Kx = NumberField::create(monicize(g));
      x0 = Rat(1) / g.leading() * Kx->generator();
    } else {
      continue;
    }
    NFElem delta = eval_poly(Tpoly, x0);
    if (delta.is_zero() || element_sqrt(delta).has_value()) {
      if (Kx->degree() == 4) cands.push_back(Kx);
    } else if (dg == 2) {
      QPoly mu = minimal_polynomial(delta);
      if (mu.degree() == 1) {
        auto comp = compositum(Kx, NumberField::quadratic(-mu[0]), 4);
        if (!comp.empty()) cands.push_back(comp.front());
      } else {
        cands.push_back(NumberField::create(subst_power(mu, 2)));
      }
    }

    for (const auto& L : cands) {
      if (!L || L->degree() != 4) continue;
      EllipticCurve<NFElem> EL = base_change(E, L);
      CurvePoint<NFElem> PL(EL, L->from_rational(P.x()), L->from_rational(P.y()));
      for (const NFElem& x : roots_in_field(g, L)) {
        NFElem d2 = eval_poly(Tpoly, x);
        NFElem lin = EL.a1() * x + EL.a3();
        std::vector<NFElem> ys;
        if (d2.is_zero()) {
          ys.push_back(Rat(-1, 2) * lin);
        } else if (auto s = element_sqrt(d2)) {
          ys.push_back(Rat(1, 2) * (*s - lin));
          ys.push_back(Rat(1, 2) * (-*s - lin));
        }
        for (const NFElem& y : ys) {
          CurvePoint<NFElem> Q(EL, x, y);
          if (!(scalar_mul(EL, 2, Q) == PL)) continue;
          if (exact_order(EL, Q, 72) != std::optional<int>(2 * *N)) continue;
          return {L, Q};
        }
      }
    }
  }
  throw std::runtime_error("no quartic field halves the point");
}

Rat j_eval(JMap name, const Rat& arg) {
  auto cube = [](const QPoly& f) { return f * f * f; };
  QPoly x = QPoly::x();
  QPoly one{Rat(1)};
  QPoly num, den;
  switch (name) {
    case JMap::kJ1:
      num = Rat(27) * cube(x + one) * cube(x + QPoly{Rat(3)}) *
            cube(x * x + QPoly{Rat(3)});
      den = cube(x) * cube(x * x + Rat(3) * x + QPoly{Rat(3)});
      break;
    case JMap::kJ2:
      num = Rat(27) * cube(x + one) * cube(x - QPoly{Rat(3)});
      den = cube(x);
      break;
    case JMap::kj5:
      num = cube(x * x + Rat(10) * x + QPoly{Rat(5)});
      den = x;
      break;
    case JMap::kj7:
      num = (x * x + Rat(13) * x + QPoly{Rat(49)}) * cube(x * x + Rat(5) * x + one);
      den = x;
      break;
    case JMap::kj8:
      num = cube(x * x * x * x - Rat(16) * x * x + QPoly{Rat(16)});
      den = (x * x - QPoly{Rat(16)}) * x * x;
      break;
  }
  Rat d = den.eval(arg);
  if (d == 0) throw std::invalid_argument("j parametrization evaluated at a pole");
  return num.eval(arg) / d;
}

WitnessReport verify_witnesses() {
  WitnessReport rep;
  auto check = [&](const std::string& what, bool ok) { rep.checks.push_back({what, ok}); };

  // genus-2 curve attached to the 21-torsion argument: h*s^3 = h^2 + 13h + 49
  auto on_c21 = [](const Rat& h, const Rat& s) {
    return h * s * s * s == h * h + 13 * h + 49;
  };
  check("(7,3) on h*s^3 = h^2+13h+49", on_c21(7, 3));
  check("(-7,-1) on h*s^3 = h^2+13h+49", on_c21(-7, -1));
  check("j7(7) = 3^3*5^3*17^3", j_eval(JMap::kj7, 7) == 16581375);
  check("j7(-7) = -3^3*5^3", j_eval(JMap::kj7, -7) == -3375);

  // its hyperelliptic model y^2 = x^6 - 26x^3 - 27
  auto on_c21h = [](const Rat& x, const Rat& y) {
    Rat x3 = x * x * x;
    return y * y == x3 * x3 - 26 * x3 - 27;
  };
  check("(-1,0) on y^2 = x^6-26x^3-27", on_c21h(-1, 0));
  check("(3,0) on y^2 = x^6-26x^3-27", on_c21h(3, 0));

  // hyperelliptic model attached to the 24-torsion argument: y^2 = x^6 + 1
  auto on_c24 = [](const Rat& x, const Rat& y) {
    Rat x3 = x * x * x;
    return y * y == x3 * x3 + 1;
  };
  check("(0,1) on y^2 = x^6+1", on_c24(0, 1));
  check("(0,-1) on y^2 = x^6+1", on_c24(0, -1));

  // square-discriminant conditions from the full-2-torsion arguments
  check("(0,0) on 3t(t^2-6t-3) = r^2",
        Rat(3) * 0 * (Rat(0) * 0 - 6 * Rat(0) - 3) == Rat(0) * 0);
  check("(0,0) on 3t(t^2+3t+3) = r^2",
        Rat(3) * 0 * (Rat(0) * 0 + 3 * Rat(0) + 3) == Rat(0) * 0);

  // genus-1 curve from the C15 argument: (s^6+10s^3+5) t = 3(t+1)(t-3) s
  auto on_c15 = [](const Rat& s, const Rat& t) {
    Rat s3 = s * s * s;
    return (s3 * s3 + 10 * s3 + 5) * t == 3 * (t + 1) * (t - 3) * s;
  };
  const std::pair<Rat, Rat> pts[] = {{Rat(-5, 2), Rat(9, 32)},
                                     {Rat(-5, 2), Rat(-32, 3)},
                                     {Rat(-2), Rat(-2, 3)},
                                     {Rat(0), Rat(0)},
                                     {Rat(-2), Rat(9, 2)}};
  for (const auto& [s, t] : pts) {
    std::ostringstream os;
    os << "(" << to_string(s) << "," << to_string(t) << ") on (s^6+10s^3+5)t = 3(t+1)(t-3)s";
    check(os.str(), on_c15(s, t));
  }
  check("j5(-8) = 11^3/2^3", j_eval(JMap::kj5, -8) == Rat(1331, 8));
  check("j5(-125/8) = -29^3*41^3/2^15",
        j_eval(JMap::kj5, Rat(-125, 8)) == Rat(Int(-24389) * 68921, 32768));
  return rep;
}

C15Report c15_check(
    const std::function<std::optional<EllipticCurve<Rat>>(const std::string&)>& lookup) {
  C15Report rep;
  const char* labels[] = {"50a1", "450b2", "50a3", "50a4"};
  const Rat expected[] = {Rat(-25, 2), Rat(Int(-25) * 13997521, 8),
                          Rat(Int(-5) * 24389, 32), Rat(Int(5) * 9393931, 32768)};
  std::optional<EllipticCurve<Rat>> e50a4;
  for (int i = 0; i < 4; ++i) {
    C15Row row;
    row.label = labels[i];
    auto E = lookup(labels[i]);
    row.has_data = E.has_value();
    if (E) {
      Rat j = E->j_invariant();
      row.pass = (j == expected[i]);
      row.detail = "j = " + to_string(j);
      if (i == 3) e50a4 = E;
    } else {
      row.pass = false;
      row.detail = "skipped: missing data";
    }
    rep.rows.push_back(row);
  }
  rep.torsion_checked = e50a4.has_value();
  rep.torsion_pass = false;
  if (e50a4) {
    auto K = NumberField::create(parse_poly("x^4 - 2*x^3 + 5*x^2 - 4*x + 19"));
    rep.torsion_pass =
        torsion_over_K(*e50a4, K).structure == TorsionStructure::cyclic(15);
  }
  return rep;
}

}  // namespace qtors
