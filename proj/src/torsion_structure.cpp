#include "qtors/torsion_structure.hpp"

#include <numeric>
#include <stdexcept>

namespace qtors {

TorsionStructure::TorsionStructure(int a_, int b_) : a(a_), b(b_) {
  if (a < 1 || b < 1 || b % a != 0)
    throw std::invalid_argument("torsion structure needs a | b, a,b >= 1");
}

std::string TorsionStructure::name() const {
  if (is_cyclic()) return "C" + std::to_string(b);
  return "C" + std::to_string(a) + "xC" + std::to_string(b);
}

std::string TorsionStructure::compact() const {
  if (is_cyclic()) return "(" + std::to_string(b) + ")";
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

bool subgroup_of(const TorsionStructure& A, const TorsionStructure& B) {
  return B.a % A.a == 0 && B.b % A.b == 0;
}

std::set<int> element_orders(const TorsionStructure& H) {
  std::set<int> out;
  for (int d1 = 1; d1 <= H.a; ++d1) {
    if (H.a % d1 != 0) continue;
    for (int d2 = 1; d2 <= H.b; ++d2) {
      if (H.b % d2 != 0) continue;
      out.insert(std::lcm(d1, d2));
    }
  }
  return out;
}

}  // namespace qtors
