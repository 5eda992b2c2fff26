#pragma once

#include <compare>
#include <set>
#include <string>

namespace qtors {

/// Abelian group C_a x C_b with a | b; cyclic groups are stored with a = 1.
struct TorsionStructure {
  int a = 1;
  int b = 1;

  TorsionStructure() = default;
  TorsionStructure(int a_, int b_);
  static TorsionStructure cyclic(int n) { return TorsionStructure(1, n); }

  int order() const { return a * b; }
  bool is_cyclic() const { return a == 1; }

  auto operator<=>(const TorsionStructure&) const = default;

  /// "C5", "C2xC8"
  std::string name() const;
  /// paper-style "(5)", "(2,8)"
  std::string compact() const;
};

/// True iff C_a1 x C_b1 embeds into C_a2 x C_b2, i.e. a1 | a2 and b1 | b2.
bool subgroup_of(const TorsionStructure& A, const TorsionStructure& B);

/// All element orders of C_a x C_b: lcm(d1, d2) over d1 | a, d2 | b.
std::set<int> element_orders(const TorsionStructure& H);

}  // namespace qtors
