#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qtors/rational.hpp"
#include "qtors/torsion_structure.hpp"

namespace qtors {

using GroupSet = std::set<TorsionStructure>;

/// Read-only classification data for torsion of rational elliptic curves
/// over number fields of degree <= 4, plus the exclusion-rule engine that
/// regenerates the allowed-pairs table from first principles.
namespace tables {

/// Mazur's list: the 15 torsion structures over Q.
const std::vector<TorsionStructure>& rational_groups();  // Phi(1)

/// Primes that appear as torsion-point orders for curves over Q base-changed
/// to degree-d fields, d = 1..4.
const std::set<int>& torsion_primes(int degree);  // S_Q(d)

const GroupSet& quadratic_groups();        // Phi_Q(2)
const GroupSet& cubic_groups();            // Phi_Q(3)
const GroupSet& galois_v4_groups();        // Phi_Q^V4(4)
const GroupSet& galois_c4_groups();        // Phi_Q^C4(4)
const GroupSet& infinite_groups_deg3();    // Phi^inf(3)
const GroupSet& infinite_groups_deg4();    // Phi^inf(4)
const GroupSet& quartic_star_groups();     // Phi*_Q(4)
const GroupSet& quartic_infinite_groups(); // Phi^inf_Q(4) = star minus C15

/// Phi*_Q(4, G) for G in Phi(1).
const GroupSet& quartic_star_groups_for(const TorsionStructure& G);

/// Phi^CM(d) for d = 1..7.
const GroupSet& cm_groups(int degree);

struct SutherlandRow {
  int p;              // 3 or 5
  std::string label;  // e.g. "3Ns"
  int d0, d1, d;
};
const std::vector<SutherlandRow>& mod_p_image_data();

/// The four j-invariants of rational curves reaching C15 over a quartic.
const std::vector<Rat>& c15_j_invariants();

/// Row universe of the allowed-pairs table (Phi^inf(4), printed order).
const std::vector<TorsionStructure>& table1_rows();

}  // namespace tables

/// Outcome of the exclusion rules for a pair (G, H).
struct RuleVerdict {
  enum Kind { kAllowed, kRuledOut, kNotSupergroup } kind;
  std::string rule_id;  // "teo-N" when kind == kRuledOut
};

/// Applies the containment check and then the exclusion rules in order
/// teo-1,2,3,4,5,6,7,8,9,11,12; reports the first rule that fires.
RuleVerdict rule_filter(const TorsionStructure& G, const TorsionStructure& H);

/// One cell of the regenerated table: "-", "ok", or a rule id.
struct Table1Cell {
  std::string text;
};

/// Full table over table1_rows() x rational_groups(). Throws if the allowed
/// set of any column differs from the stored quartic_star_groups_for(G).
std::vector<std::vector<Table1Cell>> generate_table1();

/// Asserts every stored-set invariant; throws std::logic_error on failure.
void check_table_invariants();

}  // namespace qtors
