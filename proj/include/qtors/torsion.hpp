#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qtors/classification.hpp"
#include "qtors/curve.hpp"
#include "qtors/numberfield.hpp"
#include "qtors/torsion_structure.hpp"

namespace qtors {

/// Raised when a computed torsion structure falls outside the classified set
/// for the curve's rational torsion; the exhaustive search mode is the escape
/// hatch for investigating such curves.
class SporadicCandidateError : public std::runtime_error {
 public:
  SporadicCandidateError(const std::string& what, TorsionStructure found)
      : std::runtime_error(what), found_(found) {}
  const TorsionStructure& found() const { return found_; }

 private:
  TorsionStructure found_;
};

/// Per-curve cache of division polynomials and their factor lists so growth
/// enumeration over many fields factors each psi_n once.
class TorsionContext {
 public:
  explicit TorsionContext(const EllipticCurve<Rat>& E) : E_(E) {}
  const EllipticCurve<Rat>& curve() const { return E_; }
  const QPoly& psi(int n);
  /// bounded_factors(psi(n), 4)
  const std::vector<QPoly>& psi_factors(int n);

 private:
  const EllipticCurve<Rat>& E_;
  std::map<int, QPoly> psi_;
  std::map<int, std::vector<QPoly>> factors_;
};

enum class SearchMode {
  kClassified,  // candidate orders from the classification tables
  kExhaustive   // every prime power <= 24, no membership check
};

struct RationalTorsion {
  TorsionStructure structure;
  std::vector<CurvePoint<Rat>> generators;
};

/// E(Q)_tors by collecting rational points of prime-power order from the
/// division polynomials and closing under addition. Throws std::logic_error
/// if the assembled structure is not in Mazur's list.
RationalTorsion torsion_over_Q(const EllipticCurve<Rat>& E);

struct FieldTorsion {
  TorsionStructure structure;
  std::vector<CurvePoint<NFElem>> points;  // the full torsion point set
};

/// E(K)_tors for [K:Q] in {1, 2, 4}. In classified mode the candidate point
/// orders come from the sets Phi*_Q(4, G); a structure outside that table
/// raises SporadicCandidateError.
FieldTorsion torsion_over_K(const EllipticCurve<Rat>& E, const NumberField::Ptr& K,
                            SearchMode mode = SearchMode::kClassified,
                            TorsionContext* ctx = nullptr);

struct GrowthEntry {
  NumberField::Ptr field;
  TorsionStructure structure;
  bool minimal;  // no proper subfield realizes the same structure
};

struct GrowthResult {
  TorsionStructure base;                       // E(Q)_tors
  std::vector<GrowthEntry> entries;            // all growth fields found
  std::map<int, std::vector<QPoly>> factors;   // psi_n factor lists examined
};

/// Enumerates the degree 2 and 4 fields where the torsion of E grows:
/// fields of x-coordinates of candidate torsion points, their y-coordinate
/// extensions, and all composita of degree <= 4, deduplicated up to
/// isomorphism; each is evaluated with torsion_over_K.
GrowthResult growth_fields(const EllipticCurve<Rat>& E,
                           SearchMode mode = SearchMode::kClassified);

/// Prime powers q such that points of order q must be searched to assemble
/// every torsion structure in `groups`.
std::set<int> required_prime_powers(const GroupSet& groups);

}  // namespace qtors
