#include "qtors/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qtors {

namespace {
const Rat kZero = 0;
}

QPoly::QPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rat& c) {
  QPoly f;
  if (c != 0) f.c_.push_back(c);
  return f;
}

QPoly QPoly::monomial(const Rat& c, int k) {
  QPoly f;
  if (c != 0) {
    f.c_.assign(k + 1, Rat(0));
    f.c_[k] = c;
  }
  return f;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& QPoly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

const Rat& QPoly::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of 0");
  return c_.back();
}

Rat QPoly::eval(const Rat& t) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

QPoly operator+(const QPoly& f, const QPoly& g) {
  std::vector<Rat> c(std::max(f.coeffs().size(), g.coeffs().size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = f[(int)i] + g[(int)i];
  return QPoly(std::move(c));
}

QPoly operator-(const QPoly& f, const QPoly& g) {
  std::vector<Rat> c(std::max(f.coeffs().size(), g.coeffs().size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = f[(int)i] - g[(int)i];
  return QPoly(std::move(c));
}

QPoly operator-(const QPoly& f) { return Rat(-1) * f; }

QPoly operator*(const QPoly& f, const QPoly& g) {
  if (f.is_zero() || g.is_zero()) return QPoly();
  std::vector<Rat> c(f.coeffs().size() + g.coeffs().size() - 1, Rat(0));
  for (size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i] == 0) continue;
    for (size_t j = 0; j < g.coeffs().size(); ++j)
      c[i + j] += f.coeffs()[i] * g.coeffs()[j];
  }
  return QPoly(std::move(c));
}

QPoly operator*(const Rat& a, const QPoly& f) {
  if (a == 0) return QPoly();
  std::vector<Rat> c = f.coeffs();
  for (auto& x : c) x *= a;
  return QPoly(std::move(c));
}

std::pair<QPoly, QPoly> divrem(const QPoly& f, const QPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (f.degree() < g.degree()) return {QPoly(), f};
  std::vector<Rat> r = f.coeffs();
  std::vector<Rat> q(f.degree() - g.degree() + 1, Rat(0));
  const Rat& lg = g.leading();
  for (int i = f.degree(); i >= g.degree(); --i) {
    if (r[i] == 0) continue;
    Rat t = r[i] / lg;
    q[i - g.degree()] = t;
    for (int j = 0; j <= g.degree(); ++j) r[i - g.degree() + j] -= t * g[j];
  }
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

bool divides(const QPoly& g, const QPoly& f) {
  if (g.is_zero()) return f.is_zero();
  return divrem(f, g).second.is_zero();
}

QPoly derivative(const QPoly& f) {
  if (f.degree() <= 0) return QPoly();
  std::vector<Rat> c(f.degree(), Rat(0));
  for (int i = 1; i <= f.degree(); ++i) c[i - 1] = Rat(i) * f[i];
  return QPoly(std::move(c));
}

std::pair<Rat, QPoly> content_and_primitive(const QPoly& f) {
  if (f.is_zero()) return {Rat(0), QPoly()};
  Int num_gcd = 0, den_lcm = 1;
  for (const Rat& x : f.coeffs()) {
    if (x == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), rat_num(x).get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), rat_den(x).get_mpz_t());
  }
  Rat content(num_gcd, den_lcm);
  content.canonicalize();
  if (f.leading() < 0) content = -content;
  std::vector<Rat> c = f.coeffs();
  for (auto& x : c) {
    x /= content;
    x.canonicalize();
  }
  return {content, QPoly(std::move(c))};
}

std::vector<Int> integer_coeffs(const QPoly& f) {
  std::vector<Int> out;
  out.reserve(f.coeffs().size());
  for (const Rat& x : f.coeffs()) {
    if (rat_den(x) != 1) throw std::invalid_argument("polynomial is not integral");
    out.push_back(rat_num(x));
  }
  return out;
}

namespace {

// pseudo-remainder of integer polynomials: lc(g)^(df-dg+1) * f mod g
std::vector<Int> prem(std::vector<Int> r, const std::vector<Int>& g) {
  int dg = (int)g.size() - 1;
  const Int& lg = g.back();
  while ((int)r.size() - 1 >= dg && !r.empty()) {
    Int t = r.back();
    int shift = (int)r.size() - 1 - dg;
    for (auto& x : r) x *= lg;
    for (int j = 0; j <= dg; ++j) r[shift + j] -= t * g[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return r;
}

std::vector<Int> int_primitive(std::vector<Int> v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return v;
  if (v.back() < 0) g = -g;
  for (auto& x : v) x /= g;
  return v;
}

QPoly from_int_coeffs(const std::vector<Int>& v) {
  std::vector<Rat> c;
  c.reserve(v.size());
  for (const Int& x : v) c.emplace_back(x);
  return QPoly(std::move(c));
}

}  // namespace

QPoly poly_gcd(const QPoly& f, const QPoly& g) {
  if (f.is_zero()) return monic(g);
  if (g.is_zero()) return monic(f);
  std::vector<Int> a = integer_coeffs(content_and_primitive(f).second);
  std::vector<Int> b = integer_coeffs(content_and_primitive(g).second);
  if (a.size() < b.size()) std::swap(a, b);
  while (b.size() > 1) {
    std::vector<Int> r = prem(a, b);
    if (r.empty()) return monic(from_int_coeffs(b));
    a = std::move(b);
    b = int_primitive(std::move(r));
  }
  return QPoly{Rat(1)};  // nonzero constant remainder: coprime
}

QPoly monic(const QPoly& f) {
  if (f.is_zero()) return f;
  return Rat(1) / f.leading() * f;
}

QPoly compose(const QPoly& f, const QPoly& g) {
  QPoly acc;
  for (int i = f.degree(); i >= 0; --i) acc = acc * g + QPoly::constant(f[i]);
  return acc;
}

QPoly subst_power(const QPoly& f, int k) {
  if (f.is_zero()) return f;
  std::vector<Rat> c(f.degree() * k + 1, Rat(0));
  for (int i = 0; i <= f.degree(); ++i) c[i * k] = f[i];
  return QPoly(std::move(c));
}

QPoly squarefree_part(const QPoly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree part of 0");
  if (f.degree() == 0) return QPoly{Rat(1)};
  QPoly g = poly_gcd(f, derivative(f));
  return monic(divrem(f, g).first);
}

Rat resultant(const QPoly& f, const QPoly& g) {
  // subresultant-free definition via the Euclidean algorithm over Q:
  // res(f,g) = lc(g)^(df-dr) * (-1)^(df*dg) * res(g, r) with r = f mod g.
  if (f.is_zero() || g.is_zero()) return 0;
  if (f.degree() == 0) {
    Rat r = f[0];
    Rat out = 1;
    for (int i = 0; i < g.degree(); ++i) out *= r;
    return out;
  }
  if (g.degree() == 0) {
    Rat r = g[0];
    Rat out = 1;
    for (int i = 0; i < f.degree(); ++i) out *= r;
    return out;
  }
  QPoly a = f, b = g;
  Rat acc = 1;
  bool neg = false;
  while (b.degree() > 0) {
    QPoly r = divrem(a, b).second;
    if ((a.degree() % 2) == 1 && (b.degree() % 2) == 1) neg = !neg;
    int dr = r.is_zero() ? -1 : r.degree();
    if (r.is_zero()) return 0;
    Rat lb = b.leading();
    Rat p = 1;
    for (int i = 0; i < a.degree() - dr; ++i) p *= lb;
    acc *= p;
    a = b;
    b = r;
  }
  Rat lb = b[0];
  Rat p = 1;
  for (int i = 0; i < a.degree(); ++i) p *= lb;
  return (neg ? -acc : acc) * p;
}

std::string QPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& a = (*this)[i];
    if (a == 0) continue;
    Rat mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (i == 0) {
      os << to_string(mag);
    } else {
      if (!unit) os << to_string(mag) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

struct PolyParser {
  const std::string& s;
  size_t i = 0;
  explicit PolyParser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }

  bool eof() {
    skip_ws();
    return i >= s.size();
  }

  // term := [coef] ['*'] [x ['^' exp]]
  QPoly parse_term(int sign) {
    skip_ws();
    Rat coef = 1;
    bool have_coef = false;
    size_t start = i;
    while (i < s.size() && (std::isdigit((unsigned char)s[i]) || s[i] == '/')) ++i;
    if (i > start) {
      coef = parse_rational(s.substr(start, i - start));
      have_coef = true;
    }
    skip_ws();
    if (i < s.size() && s[i] == '*') {
      ++i;
      skip_ws();
    }
    int exp = 0;
    if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
      ++i;
      exp = 1;
      skip_ws();
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip_ws();
        size_t e0 = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == e0) throw std::invalid_argument("bad exponent in polynomial");
        exp = std::stoi(s.substr(e0, i - e0));
      }
    } else if (!have_coef) {
      throw std::invalid_argument("bad polynomial term");
    }
    return QPoly::monomial(Rat(sign) * coef, exp);
  }

  QPoly parse() {
    QPoly acc;
    int sign = 1;
    skip_ws();
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -1;
      ++i;
    }
    acc = parse_term(sign);
    while (!eof()) {
      skip_ws();
      if (s[i] == '+')
        sign = 1;
      else if (s[i] == '-')
        sign = -1;
      else
        throw std::invalid_argument("unexpected character in polynomial");
      ++i;
      acc = acc + parse_term(sign);
    }
    return acc;
  }
};

}  // namespace

QPoly parse_poly(const std::string& s) { return PolyParser(s).parse(); }

}  // namespace qtors
