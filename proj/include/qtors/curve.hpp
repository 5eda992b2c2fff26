#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qtors/numberfield.hpp"
#include "qtors/poly.hpp"

namespace qtors {

namespace detail {

inline Rat make_constant(const Rat&, const Rat& r) { return r; }
inline NFElem make_constant(const NFElem& sample, const Rat& r) {
  return sample.field()->from_rational(r);
}
inline bool field_is_zero(const Rat& x) { return x == 0; }
inline bool field_is_zero(const NFElem& x) { return x.is_zero(); }
inline Rat field_inv(const Rat& x) { return Rat(1) / x; }
inline NFElem field_inv(const NFElem& x) { return x.inverse(); }

}  // namespace detail

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over
/// Q (F = Rat) or over a number field (F = NFElem). Rejects singular models.
template <class F>
class EllipticCurve {
 public:
  EllipticCurve(F a1, F a2, F a3, F a4, F a6)
      : a1_(a1), a2_(a2), a3_(a3), a4_(a4), a6_(a6) {
    auto c = [&](const Rat& r) { return detail::make_constant(a1_, r); };
    b2_ = a1_ * a1_ + c(4) * a2_;
    b4_ = c(2) * a4_ + a1_ * a3_;
    b6_ = a3_ * a3_ + c(4) * a6_;
    b8_ = a1_ * a1_ * a6_ + c(4) * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ -
          a4_ * a4_;
    disc_ = -b2_ * b2_ * b8_ - c(8) * b4_ * b4_ * b4_ - c(27) * b6_ * b6_ +
            c(9) * b2_ * b4_ * b6_;
    if (detail::field_is_zero(disc_)) throw std::invalid_argument("singular curve");
  }

  const F& a1() const { return a1_; }
  const F& a2() const { return a2_; }
  const F& a3() const { return a3_; }
  const F& a4() const { return a4_; }
  const F& a6() const { return a6_; }
  const F& b2() const { return b2_; }
  const F& b4() const { return b4_; }
  const F& b6() const { return b6_; }
  const F& b8() const { return b8_; }
  const F& discriminant() const { return disc_; }

  F j_invariant() const {
    auto c = [&](const Rat& r) { return detail::make_constant(a1_, r); };
    F c4 = b2_ * b2_ - c(24) * b4_;
    return c4 * c4 * c4 * detail::field_inv(disc_);
  }

  bool contains(const F& x, const F& y) const {
    F lhs = y * y + a1_ * x * y + a3_ * y;
    F rhs = x * x * x + a2_ * x * x + a4_ * x + a6_;
    return detail::field_is_zero(lhs - rhs);
  }

 private:
  F a1_, a2_, a3_, a4_, a6_, b2_, b4_, b6_, b8_, disc_;
};

template <class F>
class CurvePoint {
 public:
  CurvePoint() : inf_(true) {}
  CurvePoint(const EllipticCurve<F>& E, F x, F y) : inf_(false), x_(x), y_(y) {
    if (!E.contains(x_, y_)) throw std::invalid_argument("point not on curve");
  }
  static CurvePoint infinity() { return CurvePoint(); }

  bool is_infinity() const { return inf_; }
  const F& x() const {
    if (inf_) throw std::domain_error("coordinates of the point at infinity");
    return x_;
  }
  const F& y() const {
    if (inf_) throw std::domain_error("coordinates of the point at infinity");
    return y_;
  }
  bool operator==(const CurvePoint& o) const {
    if (inf_ || o.inf_) return inf_ == o.inf_;
    return detail::field_is_zero(x_ - o.x_) && detail::field_is_zero(y_ - o.y_);
  }

 private:
  bool inf_;
  F x_{}, y_{};
};

template <class F>
CurvePoint<F> negate(const EllipticCurve<F>& E, const CurvePoint<F>& P) {
  if (P.is_infinity()) return P;
  return CurvePoint<F>(E, P.x(), -P.y() - E.a1() * P.x() - E.a3());
}

template <class F>
CurvePoint<F> add(const EllipticCurve<F>& E, const CurvePoint<F>& P,
                  const CurvePoint<F>& Q) {
  auto c = [&](const Rat& r) { return detail::make_constant(E.a1(), r); };
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  const F &x1 = P.x(), &y1 = P.y(), &x2 = Q.x(), &y2 = Q.y();
  F lambda = c(0), nu = c(0);
  if (detail::field_is_zero(x1 - x2)) {
    if (detail::field_is_zero(y2 + y1 + E.a1() * x2 + E.a3()))
      return CurvePoint<F>::infinity();
    F den = detail::field_inv(c(2) * y1 + E.a1() * x1 + E.a3());
    lambda = (c(3) * x1 * x1 + c(2) * E.a2() * x1 + E.a4() - E.a1() * y1) * den;
    nu = (-(x1 * x1 * x1) + E.a4() * x1 + c(2) * E.a6() - E.a3() * y1) * den;
  } else {
    F den = detail::field_inv(x2 - x1);
    lambda = (y2 - y1) * den;
    nu = (y1 * x2 - y2 * x1) * den;
  }
  F x3 = lambda * lambda + E.a1() * lambda - E.a2() - x1 - x2;
  F y3 = -(lambda + E.a1()) * x3 - nu - E.a3();
  return CurvePoint<F>(E, x3, y3);
}

template <class F>
CurvePoint<F> scalar_mul(const EllipticCurve<F>& E, long k, CurvePoint<F> P) {
  if (k < 0) {
    k = -k;
    P = negate(E, P);
  }
  CurvePoint<F> R = CurvePoint<F>::infinity();
  while (k > 0) {
    if (k & 1) R = add(E, R, P);
    k >>= 1;
    if (k) P = add(E, P, P);
  }
  return R;
}

/// Smallest k >= 1 with kP = infinity, or nullopt past the bound.
template <class F>
std::optional<int> exact_order(const EllipticCurve<F>& E, const CurvePoint<F>& P,
                               int bound = 36) {
  CurvePoint<F> R = P;
  for (int k = 1; k <= bound; ++k) {
    if (R.is_infinity()) return k;
    R = add(E, R, P);
  }
  return std::nullopt;
}

/// x^3 + a2 x^2 + a4 x + a6 and companions as rational polynomials.
QPoly curve_rhs_poly(const EllipticCurve<Rat>& E);
/// (2y + a1 x + a3)^2 as a polynomial in x: 4x^3 + b2 x^2 + 2 b4 x + b6.
QPoly two_torsion_poly(const EllipticCurve<Rat>& E);

/// Division polynomial in x for 2 <= n <= 24: roots are the x-coordinates of
/// the points of order dividing n. For even n this is the y-eliminated form
/// (2-torsion cubic times the even part), so psi_m | psi_n whenever m | n.
QPoly division_polynomial(const EllipticCurve<Rat>& E, int n);

EllipticCurve<NFElem> base_change(const EllipticCurve<Rat>& E,
                                  const NumberField::Ptr& K);

std::string curve_equation_str(const EllipticCurve<Rat>& E);

}  // namespace qtors
