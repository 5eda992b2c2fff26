#include "qtors/curve.hpp"

#include <sstream>

namespace qtors {

QPoly curve_rhs_poly(const EllipticCurve<Rat>& E) {
  return QPoly{E.a6(), E.a4(), E.a2(), Rat(1)};
}

QPoly two_torsion_poly(const EllipticCurve<Rat>& E) {
  return QPoly{E.b6(), 2 * E.b4(), E.b2(), Rat(4)};
}

namespace {

// f_n: psi_n for odd n, psi_n / psi_2 for even n, as polynomials in x
std::vector<QPoly> f_sequence(const EllipticCurve<Rat>& E, int nmax) {
  QPoly T = two_torsion_poly(E);
  QPoly T2 = T * T;
  std::vector<QPoly> f(nmax + 1);
  f[0] = QPoly();
  f[1] = QPoly{Rat(1)};
  if (nmax >= 2) f[2] = QPoly{Rat(1)};
  if (nmax >= 3) f[3] = QPoly{E.b8(), 3 * E.b6(), 3 * E.b4(), E.b2(), Rat(3)};
  if (nmax >= 4)
    f[4] = QPoly{E.b4() * E.b8() - E.b6() * E.b6(),
                 E.b2() * E.b8() - E.b4() * E.b6(),
                 10 * E.b8(),
                 10 * E.b6(),
                 5 * E.b4(),
                 E.b2(),
                 Rat(2)};
  for (int n = 5; n <= nmax; ++n) {
    int m = n / 2;
    if (n % 2 == 1) {
      if (m % 2 == 0)
        f[n] = T2 * f[m + 2] * f[m] * f[m] * f[m] - f[m - 1] * f[m + 1] * f[m + 1] * f[m + 1];
      else
        f[n] = f[m + 2] * f[m] * f[m] * f[m] - T2 * f[m - 1] * f[m + 1] * f[m + 1] * f[m + 1];
    } else {
      f[n] = f[m] * (f[m + 2] * f[m - 1] * f[m - 1] - f[m - 2] * f[m + 1] * f[m + 1]);
    }
  }
  return f;
}

}  // namespace

QPoly division_polynomial(const EllipticCurve<Rat>& E, int n) {
  if (n < 2 || n > 24) throw std::invalid_argument("division polynomial index out of range");
  auto f = f_sequence(E, n);
  if (n % 2 == 1) return f[n];
  return two_torsion_poly(E) * f[n];
}

EllipticCurve<NFElem> base_change(const EllipticCurve<Rat>& E, const NumberField::Ptr& K) {
  return EllipticCurve<NFElem>(K->from_rational(E.a1()), K->from_rational(E.a2()),
                               K->from_rational(E.a3()), K->from_rational(E.a4()),
                               K->from_rational(E.a6()));
}

std::string curve_equation_str(const EllipticCurve<Rat>& E) {
  std::ostringstream os;
  os << "y^2";
  auto term = [&](const Rat& a, const std::string& mono) {
    if (a == 0) return;
    Rat mag = abs(a);
    os << (a < 0 ? " - " : " + ");
    if (mag != 1 || mono.empty()) {
      os << to_string(mag);
      if (!mono.empty()) os << "*";
    }
    os << mono;
  };
  term(E.a1(), "x*y");
  term(E.a3(), "y");
  os << " = x^3";
  term(E.a2(), "x^2");
  term(E.a4(), "x");
  term(E.a6(), "");
  return os.str();
}

}  // namespace qtors
