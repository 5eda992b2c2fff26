#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qtors/poly.hpp"

namespace qtors {

class NFElem;

/// A number field Q(alpha) of degree 1, 2 or 4, presented by the monic
/// irreducible minimal polynomial of alpha. Fields carry no canonical form;
/// deduplication goes through is_isomorphic. Degree 3 is rejected.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  using Ptr = std::shared_ptr<const NumberField>;

  /// Validates monic, degree in {1,2,4}, irreducible.
  static Ptr create(const QPoly& min_poly, std::string label = "");

  /// The rationals as a degree-1 field.
  static Ptr rationals();

  /// Q(sqrt(d)), d not a square; the generator is sqrt of the squarefree
  /// kernel of d.
  static Ptr quadratic(const Rat& d);

  const QPoly& min_poly() const { return min_poly_; }
  int degree() const { return min_poly_.degree(); }
  const std::string& label() const { return label_; }

  NFElem zero() const;
  NFElem one() const;
  NFElem from_rational(const Rat& r) const;
  NFElem generator() const;
  NFElem element(std::vector<Rat> coords) const;

  /// Min poly printed integer-primitive, e.g. "x^4 - 2*x^3 + 5*x^2 - 4*x + 19".
  std::string min_poly_str() const;

 private:
  explicit NumberField(QPoly mp, std::string label)
      : min_poly_(std::move(mp)), label_(std::move(label)) {}
  QPoly min_poly_;
  std::string label_;
};

/// Element of a NumberField in the power basis 1, alpha, ..., alpha^(d-1).
class NFElem {
 public:
  NFElem() = default;
  NFElem(NumberField::Ptr field, std::vector<Rat> coords);

  const NumberField::Ptr& field() const { return field_; }
  const std::vector<Rat>& coords() const { return coords_; }
  const Rat& coord(int i) const;

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // throws if not rational

  NFElem operator-() const;
  NFElem inverse() const;  // throws on zero

  bool operator==(const NFElem& o) const;
  std::string str(const std::string& var = "a") const;

 private:
  NumberField::Ptr field_;
  std::vector<Rat> coords_;
};

NFElem operator+(const NFElem& a, const NFElem& b);
NFElem operator-(const NFElem& a, const NFElem& b);
NFElem operator*(const NFElem& a, const NFElem& b);
NFElem operator/(const NFElem& a, const NFElem& b);
NFElem operator*(const Rat& a, const NFElem& b);

/// Evaluate a rational polynomial at a field element.
NFElem eval_poly(const QPoly& f, const NFElem& x);

/// Minimal polynomial of x over Q (monic); degree divides the field degree.
QPoly minimal_polynomial(const NFElem& x);

/// Some t in K with t*t = x, if one exists. Deterministic choice of sign.
std::optional<NFElem> element_sqrt(const NFElem& x);

/// All roots of f (over Q) that lie in K, sorted by coordinates.
/// Linear factors are read off directly; higher-degree irreducible factors of
/// degree dividing [K:Q] go through Trager's norm construction: factor
/// Res_y(g(y), m(x - k*y)) over Q for a shift k making it squarefree, then
/// extract each root from a gcd in K[y].
std::vector<NFElem> roots_in_field(const QPoly& f, const NumberField::Ptr& K);

/// True iff K1 and K2 are isomorphic as fields; the witness sends the
/// generator of K1 to the returned element of K2.
bool is_isomorphic(const NumberField::Ptr& K1, const NumberField::Ptr& K2,
                   NFElem* witness = nullptr);

/// All quadratic subfields of a quartic field, via the rational roots of the
/// resolvent cubic of the depressed min poly. 0, 1 or 3 results.
std::vector<NumberField::Ptr> quadratic_subfields(const NumberField::Ptr& K);

/// Compositum fields K1*K2, one per conjugate class, discarding results of
/// degree > max_degree, deduplicated up to isomorphism. The primitive element
/// is alpha1 + k*alpha2 for the smallest k >= 1 giving distinct sums.
std::vector<NumberField::Ptr> compositum(const NumberField::Ptr& K1,
                                         const NumberField::Ptr& K2,
                                         int max_degree = 4);

}  // namespace qtors
