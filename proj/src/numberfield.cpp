#include "qtors/numberfield.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qtors/factor.hpp"

namespace qtors {

namespace {

bool coords_less(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

QPoly coords_to_poly(const std::vector<Rat>& c) { return QPoly(std::vector<Rat>(c)); }

std::vector<Rat> poly_to_coords(const QPoly& f, int d) {
  std::vector<Rat> c(d, Rat(0));
  for (int i = 0; i <= f.degree(); ++i) c[i] = f[i];
  return c;
}

}  // namespace

NumberField::Ptr NumberField::create(const QPoly& min_poly, std::string label) {
  int d = min_poly.degree();
  if (d != 1 && d != 2 && d != 4)
    throw std::invalid_argument("number field degree must be 1, 2 or 4");
  if (min_poly.leading() != 1) throw std::invalid_argument("min poly must be monic");
  if (d > 1 && !bounded_factors(min_poly, d - 1).empty())
    throw std::invalid_argument("min poly is reducible: " + min_poly.str());
  return Ptr(new NumberField(min_poly, std::move(label)));
}

NumberField::Ptr NumberField::rationals() {
  static const Ptr q = create(QPoly{Rat(0), Rat(1)}, "Q");
  return q;
}

NumberField::Ptr NumberField::quadratic(const Rat& d) {
  Int kernel = square_free_kernel(rat_num(d) * rat_den(d));
  if (kernel == 1 || kernel == 0)
    throw std::invalid_argument("quadratic field over a square");
  std::ostringstream lab;
  lab << "Q(sqrt(" << kernel.get_str() << "))";
  return create(QPoly{Rat(-kernel), Rat(0), Rat(1)}, lab.str());
}

NFElem NumberField::zero() const { return from_rational(0); }
NFElem NumberField::one() const { return from_rational(1); }

NFElem NumberField::from_rational(const Rat& r) const {
  std::vector<Rat> c(degree(), Rat(0));
  c[0] = r;
  return NFElem(shared_from_this(), std::move(c));
}

NFElem NumberField::generator() const {
  std::vector<Rat> c(degree(), Rat(0));
  if (degree() == 1) {
    // alpha is rational: the root of the linear min poly
    c[0] = -min_poly_[0];
  } else {
    c[1] = 1;
  }
  return NFElem(shared_from_this(), std::move(c));
}

NFElem NumberField::element(std::vector<Rat> coords) const {
  return NFElem(shared_from_this(), std::move(coords));
}

std::string NumberField::min_poly_str() const {
  return content_and_primitive(min_poly_).second.str();
}

NFElem::NFElem(NumberField::Ptr field, std::vector<Rat> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if ((int)coords_.size() != field_->degree())
    throw std::invalid_argument("coordinate vector length != field degree");
}

const Rat& NFElem::coord(int i) const { return coords_.at(i); }

bool NFElem::is_zero() const {
  for (const Rat& c : coords_)
    if (c != 0) return false;
  return true;
}

bool NFElem::is_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rat NFElem::rational_value() const {
  if (!is_rational()) throw std::domain_error("element is not rational");
  return coords_[0];
}

bool NFElem::operator==(const NFElem& o) const {
  return field_->min_poly() == o.field_->min_poly() && coords_ == o.coords_;
}

namespace {

void check_same_field(const NFElem& a, const NFElem& b) {
  if (a.field() != b.field() && !(a.field()->min_poly() == b.field()->min_poly()))
    throw std::invalid_argument("mixed-field operands");
}

}  // namespace

NFElem operator+(const NFElem& a, const NFElem& b) {
  check_same_field(a, b);
  std::vector<Rat> c(a.coords());
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.coords()[i];
  return NFElem(a.field(), std::move(c));
}

NFElem operator-(const NFElem& a, const NFElem& b) {
  check_same_field(a, b);
  std::vector<Rat> c(a.coords());
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coords()[i];
  return NFElem(a.field(), std::move(c));
}

NFElem NFElem::operator-() const {
  std::vector<Rat> c(coords_);
  for (auto& x : c) x = -x;
  return NFElem(field_, std::move(c));
}

NFElem operator*(const Rat& a, const NFElem& b) {
  std::vector<Rat> c(b.coords());
  for (auto& x : c) x *= a;
  return NFElem(b.field(), std::move(c));
}

NFElem operator*(const NFElem& a, const NFElem& b) {
  check_same_field(a, b);
  QPoly prod = coords_to_poly(a.coords()) * coords_to_poly(b.coords());
  QPoly rem = divrem(prod, a.field()->min_poly()).second;
  return NFElem(a.field(), poly_to_coords(rem, a.field()->degree()));
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw std::domain_error("inversion of zero");
  // extended gcd of the representative polynomial with the min poly
  QPoly a = coords_to_poly(coords_);
  QPoly b = field_->min_poly();
  QPoly r0 = b, r1 = a, s0 = QPoly(), s1 = QPoly{Rat(1)};
  while (!r1.is_zero() && r1.degree() > 0) {
    auto [q, r2] = divrem(r0, r1);
    QPoly s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r1.is_zero()) throw std::logic_error("min poly not irreducible?");
  QPoly inv = divrem(Rat(1) / r1[0] * s1, b).second;
  return NFElem(field_, poly_to_coords(inv, field_->degree()));
}

NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

NFElem eval_poly(const QPoly& f, const NFElem& x) {
  NFElem acc = x.field()->zero();
  for (int i = f.degree(); i >= 0; --i) acc = acc * x + x.field()->from_rational(f[i]);
  return acc;
}

std::string NFElem::str(const std::string& var) const {
  return coords_to_poly(coords_).str(var);
}

QPoly minimal_polynomial(const NFElem& x) {
  int d = x.field()->degree();
  // Krylov: first linear dependency among 1, x, x^2, ...
  std::vector<std::vector<Rat>> rows;  // powers of x in the power basis
  NFElem p = x.field()->one();
  for (int k = 0; k <= d; ++k) {
    rows.push_back(p.coords());
    // solve sum_{i<k} c_i x^i = x^k by Gaussian elimination over Q
    if (k >= 1) {
      int n = d;
      std::vector<std::vector<Rat>> m(n, std::vector<Rat>(k + 1, Rat(0)));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) m[j][i] = rows[i][j];
      for (int j = 0; j < n; ++j) m[j][k] = rows[k][j];
      // eliminate
      std::vector<int> pivot_col(n, -1);
      int rank = 0;
      bool ok = true;
      for (int col = 0; col < k && rank < n; ++col) {
        int pr = -1;
        for (int r = rank; r < n; ++r)
          if (m[r][col] != 0) {
            pr = r;
            break;
          }
        if (pr < 0) continue;
        std::swap(m[rank], m[pr]);
        Rat inv = Rat(1) / m[rank][col];
        for (auto& v : m[rank]) v *= inv;
        for (int r = 0; r < n; ++r) {
          if (r == rank || m[r][col] == 0) continue;
          Rat f = m[r][col];
          for (int cc = col; cc <= k; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        pivot_col[rank] = col;
        ++rank;
      }
      for (int r = rank; r < n; ++r)
        if (m[r][k] != 0) ok = false;
      if (ok) {
        std::vector<Rat> coef(k + 1, Rat(0));
        coef[k] = 1;
        for (int r = 0; r < rank; ++r) coef[pivot_col[r]] = -m[r][k];
        return QPoly(std::move(coef));
      }
    }
    p = p * x;
  }
  throw std::logic_error("no minimal polynomial found");
}

std::optional<NFElem> element_sqrt(const NFElem& x) {
  if (x.is_zero()) return x.field()->zero();
  QPoly mu = minimal_polynomial(x);
  for (const NFElem& t : roots_in_field(subst_power(mu, 2), x.field())) {
    if (t * t == x) {
      // deterministic sign: first nonzero coordinate positive
      for (const Rat& c : t.coords()) {
        if (c > 0) return t;
        if (c < 0) return -t;
      }
    }
  }
  return std::nullopt;
}

namespace {

// g irreducible over Q with 2 <= deg g and deg g | [K:Q]: Trager root finding
std::vector<NFElem> trager_roots(const QPoly& g, const NumberField::Ptr& K) {
  const QPoly& m = K->min_poly();
  int d = K->degree();
  int dg = g.degree();
  const int shifts[] = {0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6, 7, -7, 8, -8,
                        9, -9, 10, -10, 11, -11, 12, -12, 13, -13, 14, -14, 15, -15};
  for (int k : shifts) {
    // norm(x) = Res_y(g(y), m(x - k*y)), computed by evaluation/interpolation
    int dn = d * dg;
    std::vector<Rat> xs, vals;
    for (int x0 = 0; (int)xs.size() <= dn; ++x0) {
      // m(x0 - k*y) as a polynomial in y
      QPoly shifted = compose(m, QPoly{Rat(x0), Rat(-k)});
      Rat v = resultant(g, shifted);
      xs.emplace_back(x0);
      vals.push_back(v);
    }
    // Lagrange interpolation
    QPoly norm;
    for (size_t i = 0; i < xs.size(); ++i) {
      QPoly li{Rat(1)};
      Rat denom = 1;
      for (size_t j = 0; j < xs.size(); ++j) {
        if (i == j) continue;
        li = li * QPoly{-xs[j], Rat(1)};
        denom *= xs[i] - xs[j];
      }
      norm = norm + (vals[i] / denom) * li;
    }
    if (norm.degree() != dn) continue;  // degenerate shift
    if (poly_gcd(norm, derivative(norm)).degree() != 0) continue;  // not squarefree

    std::vector<NFElem> roots;
    NFElem alpha = K->generator();
    for (const QPoly& F : bounded_factors(norm, std::min(dn, 4))) {
      if (F.degree() != d) continue;
      // root of g in K from gcd_{K[y]}(g(y), F(alpha + k*y));
      // polynomials in y are vectors of NFElem coefficients
      std::vector<NFElem> acc{K->zero()};
      for (int i = F.degree(); i >= 0; --i) {
        // acc = acc * (alpha + k*y) + F[i]
        std::vector<NFElem> next(acc.size() + 1, K->zero());
        for (size_t j = 0; j < acc.size(); ++j) {
          next[j] = next[j] + alpha * acc[j];
          next[j + 1] = next[j + 1] + Rat(k) * acc[j];
        }
        next[0] = next[0] + K->from_rational(F[i]);
        while (next.size() > 1 && next.back().is_zero()) next.pop_back();
        acc = std::move(next);
      }
      // gcd with g(y) over K
      std::vector<NFElem> u;
      for (int i = 0; i <= g.degree(); ++i) u.push_back(K->from_rational(g[i]));
      std::vector<NFElem> v = acc;
      auto nfdeg = [](const std::vector<NFElem>& w) { return (int)w.size() - 1; };
      auto nftrim = [](std::vector<NFElem>& w) {
        while (w.size() > 1 && w.back().is_zero()) w.pop_back();
        if (w.size() == 1 && w[0].is_zero()) w.clear();
      };
      nftrim(u);
      nftrim(v);
      while (!v.empty()) {
        // u mod v
        NFElem lead_inv = v.back().inverse();
        while (nfdeg(u) >= nfdeg(v) && !u.empty()) {
          NFElem t = u.back() * lead_inv;
          int shift = nfdeg(u) - nfdeg(v);
          for (int j = 0; j <= nfdeg(v); ++j) u[shift + j] = u[shift + j] - t * v[j];
          nftrim(u);
          if (u.empty()) break;
        }
        std::swap(u, v);
      }
      if (u.size() == 2) {
        NFElem root = -(u[0] / u[1]);
        if (eval_poly(g, root).is_zero()) roots.push_back(root);
      }
    }
    std::sort(roots.begin(), roots.end(),
              [](const NFElem& a, const NFElem& b) { return coords_less(a.coords(), b.coords()); });
    return roots;
  }
  throw std::logic_error("no squarefree Trager shift found");
}

}  // namespace

std::vector<NFElem> roots_in_field(const QPoly& f, const NumberField::Ptr& K) {
  if (f.is_zero()) throw std::invalid_argument("roots_in_field of 0");
  std::vector<NFElem> out;
  int d = K->degree();
  for (const QPoly& g : bounded_factors(f, d)) {
    if (g.degree() == 1) {
      out.push_back(K->from_rational(-g[0] / g[1]));
    } else if (d % g.degree() == 0) {
      for (auto& r : trager_roots(monic(g), K)) out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const NFElem& a, const NFElem& b) { return coords_less(a.coords(), b.coords()); });
  return out;
}

bool is_isomorphic(const NumberField::Ptr& K1, const NumberField::Ptr& K2, NFElem* witness) {
  if (K1->degree() != K2->degree()) return false;
  auto roots = roots_in_field(K1->min_poly(), K2);
  if (roots.empty()) return false;
  if (witness) *witness = roots.front();
  return true;
}

std::vector<NumberField::Ptr> quadratic_subfields(const NumberField::Ptr& K) {
  if (K->degree() != 4) throw std::invalid_argument("quadratic_subfields needs degree 4");
  const QPoly& m = K->min_poly();
  // depress: x -> x - a3/4 kills the cubic term
  Rat a3 = m[3];
  QPoly dep = compose(m, QPoly{-a3 / 4, Rat(1)});
  Rat p = dep[2], q = dep[1], r = dep[0];
  // resolvent with roots (x_i + x_j)^2
  QPoly res{-q * q, p * p - 4 * r, 2 * p, Rat(1)};
  std::vector<NumberField::Ptr> out;
  for (const Rat& z : rational_roots(res)) {
    Rat disc = (z == 0) ? p * p - 4 * r : z;
    if (disc == 0 || sqrt_exact(disc).has_value()) continue;  // degenerate
    auto F = NumberField::quadratic(disc);
    bool dup = false;
    for (auto& g : out) dup = dup || is_isomorphic(F, g);
    if (dup) continue;
    // sanity: the subfield really embeds
    if (roots_in_field(F->min_poly(), K).empty())
      throw std::logic_error("resolvent produced a non-embedding subfield");
    out.push_back(F);
  }
  std::sort(out.begin(), out.end(), [](const NumberField::Ptr& a, const NumberField::Ptr& b) {
    return coords_less(a->min_poly().coeffs(), b->min_poly().coeffs());
  });
  return out;
}

std::vector<NumberField::Ptr> compositum(const NumberField::Ptr& K1,
                                         const NumberField::Ptr& K2, int max_degree) {
  if (K1->degree() == 1) return {K2};
  if (K2->degree() == 1) return {K1};
  const QPoly& m1 = K1->min_poly();
  const QPoly& m2 = K2->min_poly();
  for (int k = 1; k <= 40; ++k) {
    // min poly of k*alpha2: k^d * m2(x/k)
    std::vector<Rat> c2(m2.degree() + 1);
    Rat kp = 1;
    for (int i = m2.degree(); i >= 0; --i) {
      c2[i] = m2[i] * kp;
      kp *= k;
    }
    QPoly m2k{std::move(c2)};
    // sums alpha1 + k*alpha2: Res_y(m1(y), m2k(x - y)) by interpolation
    int dn = m1.degree() * m2.degree();
    QPoly norm;
    {
      std::vector<Rat> xs, vals;
      for (int x0 = 0; (int)xs.size() <= dn; ++x0) {
        QPoly shifted = compose(m2k, QPoly{Rat(x0), Rat(-1)});
        xs.emplace_back(x0);
        vals.push_back(resultant(m1, shifted));
      }
      for (size_t i = 0; i < xs.size(); ++i) {
        QPoly li{Rat(1)};
        Rat denom = 1;
        for (size_t j = 0; j < xs.size(); ++j) {
          if (i == j) continue;
          li = li * QPoly{-xs[j], Rat(1)};
          denom *= xs[i] - xs[j];
        }
        norm = norm + (vals[i] / denom) * li;
      }
    }
    if (norm.degree() != dn) continue;
    if (poly_gcd(norm, derivative(norm)).degree() != 0) continue;

    int need = std::max(K1->degree(), K2->degree());
    std::vector<NumberField::Ptr> out;
    for (const QPoly& F : bounded_factors(norm, max_degree)) {
      if (F.degree() % need != 0) continue;
      if (F.degree() % K1->degree() != 0 || F.degree() % K2->degree() != 0) continue;
      // monicize: if F(theta) = 0 then lc*theta is a root of
      // G(y) = lc^(n-1) * F(y/lc), which is monic with integral coefficients
      Rat lc = F.leading();
      int n = F.degree();
      std::vector<Rat> c(n + 1);
      Rat s = Rat(1) / lc;
      for (int i = n; i >= 0; --i) {
        c[i] = F[i] * s;
        s *= lc;
      }
      QPoly G{std::move(c)};
      auto field = NumberField::create(G, K1->label().empty() || K2->label().empty()
                                              ? ""
                                              : K1->label() + "*" + K2->label());
      bool dup = false;
      for (auto& g : out) dup = dup || is_isomorphic(field, g);
      if (!dup) out.push_back(field);
    }
    return out;
  }
  throw std::logic_error("no squarefree compositum shift found");
}

}  // namespace qtors
