#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "qtors/rational.hpp"

namespace qtors {

/// Dense univariate polynomial over Q, coefficients stored lowest degree
/// first. The zero polynomial has an empty coefficient vector; otherwise the
/// leading coefficient is nonzero.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::initializer_list<Rat> coeffs_low_first);
  explicit QPoly(std::vector<Rat> coeffs_low_first);

  static QPoly zero() { return QPoly(); }
  static QPoly constant(const Rat& c);
  /// c * x^k
  static QPoly monomial(const Rat& c, int k);
  static QPoly x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  const Rat& operator[](int i) const;                             // 0 beyond degree
  const Rat& leading() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& t) const;

  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  /// Render like "x^4 - 2*x^3 + 5*x^2 - 4*x + 19", variable name `var`.
  std::string str(const std::string& var = "x") const;

 private:
  std::vector<Rat> c_;
  void trim();
};

QPoly operator+(const QPoly& f, const QPoly& g);
QPoly operator-(const QPoly& f, const QPoly& g);
QPoly operator-(const QPoly& f);
QPoly operator*(const QPoly& f, const QPoly& g);
QPoly operator*(const Rat& a, const QPoly& f);

/// Quotient and remainder over Q, deg r < deg g. Throws on g = 0.
std::pair<QPoly, QPoly> divrem(const QPoly& f, const QPoly& g);

/// True iff g | f exactly.
bool divides(const QPoly& g, const QPoly& f);

QPoly derivative(const QPoly& f);

/// Monic greatest common divisor (primitive PRS underneath); gcd(0,0) = 0.
QPoly poly_gcd(const QPoly& f, const QPoly& g);

QPoly monic(const QPoly& f);

/// f = content * primitive with primitive integral, coprime coefficients and
/// positive leading coefficient. content carries the sign; content(0) = 0.
std::pair<Rat, QPoly> content_and_primitive(const QPoly& f);

/// Integer coefficient vector of an integral polynomial (throws otherwise).
std::vector<Int> integer_coeffs(const QPoly& f);

/// f(g(x))
QPoly compose(const QPoly& f, const QPoly& g);

/// f(x^k)
QPoly subst_power(const QPoly& f, int k);

/// f / gcd(f, f'), monic. Same roots as f, each once. Throws on f = 0.
QPoly squarefree_part(const QPoly& f);

/// Resultant of f and g with respect to x (exact, via a primitive PRS).
Rat resultant(const QPoly& f, const QPoly& g);

/// Parse "x^4 - 2*x^3 + 5*x^2 - 4*x + 19" style expressions ('*' optional).
QPoly parse_poly(const std::string& s);

}  // namespace qtors
