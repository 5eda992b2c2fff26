#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qtors/curve.hpp"
#include "qtors/numberfield.hpp"

namespace qtors {

enum class KubertTarget { kC10, kC12 };

struct KubertCurve {
  EllipticCurve<Rat> curve;   // y^2 + (1-c)xy - by = x^3 - bx^2
  CurvePoint<Rat> point;      // (0, 0), of exact order 10 or 12
  Rat b, c;
};

/// Specialization of the one-parameter normal form carrying a rational point
/// of order 10 (resp. 12) at (0,0). Throws on parameters where a denominator
/// vanishes, the curve degenerates, or the marked point drops order.
KubertCurve kubert_curve(KubertTarget target, const Rat& t);

struct HalvedPoint {
  NumberField::Ptr field;      // quartic
  CurvePoint<NFElem> point;    // 2 * point = P, of exact order 2N
};

/// Finds a quartic field L and a point Q over L with 2Q = P and Q of exact
/// order 2N, where P is a rational point of finite order N. Candidates come
/// from the factors of the degree-4 duplication preimage polynomial, walked
/// in a fixed order (ascending degree, then coefficients), so the result is
/// reproducible. Throws if no quartic candidate verifies.
HalvedPoint halve_point(const EllipticCurve<Rat>& E, const CurvePoint<Rat>& P);

enum class JMap { kJ1, kJ2, kj5, kj7, kj8 };

/// Exact evaluation of the j-invariant parametrizations attached to the
/// mod-3 image families (J1, J2) and to the 5-, 7- and 8-isogeny families.
Rat j_eval(JMap name, const Rat& arg);

struct WitnessCheck {
  std::string description;
  bool pass;
};

struct WitnessReport {
  std::vector<WitnessCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Verifies that the listed rational points of the auxiliary plane curves
/// satisfy their equations exactly, and recomputes the j-invariants those
/// points induce through the parametrizations.
WitnessReport verify_witnesses();

struct C15Row {
  std::string label;
  bool has_data;
  bool pass;
  std::string detail;
};

struct C15Report {
  std::vector<C15Row> rows;
  bool torsion_checked;
  bool torsion_pass;
  bool all_pass() const {
    for (const auto& r : rows)
      if (r.has_data && !r.pass) return false;
    return torsion_checked ? torsion_pass : false;
  }
};

/// Checks the j-invariants of the four curves that reach C15 over a quartic
/// field, and that 50a4 really acquires C15 over its listed quartic field.
/// The lookup maps a curve label to its model, when the fixture has it.
C15Report c15_check(
    const std::function<std::optional<EllipticCurve<Rat>>(const std::string&)>& lookup);

}  // namespace qtors
