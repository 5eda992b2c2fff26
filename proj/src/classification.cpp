#include "qtors/classification.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtors {

namespace {

using TS = TorsionStructure;

TS C(int n) { return TS::cyclic(n); }
TS CxC(int a, int b) { return TS(a, b); }

GroupSet cyclic_range(std::initializer_list<int> ns) {
  GroupSet s;
  for (int n : ns) s.insert(C(n));
  return s;
}

GroupSet merge(const GroupSet& a, const GroupSet& b) {
  GroupSet s = a;
  s.insert(b.begin(), b.end());
  return s;
}

}  // namespace

namespace tables {

const std::vector<TS>& rational_groups() {
  static const std::vector<TS> v = {
      C(1), C(2), C(3), C(4), C(5), C(6), C(7), C(8), C(9), C(10), C(12),
      CxC(2, 2), CxC(2, 4), CxC(2, 6), CxC(2, 8)};
  return v;
}

const std::set<int>& torsion_primes(int degree) {
  static const std::set<int> low = {2, 3, 5, 7};
  static const std::set<int> high = {2, 3, 5, 7, 13};
  if (degree < 1 || degree > 4) throw std::invalid_argument("degree out of range");
  return degree <= 2 ? low : high;
}

const GroupSet& quadratic_groups() {
  static const GroupSet s = [] {
    GroupSet g = cyclic_range({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16});
    for (int m = 1; m <= 6; ++m) g.insert(CxC(2, 2 * m));
    g.insert(CxC(3, 3));
    g.insert(CxC(3, 6));
    g.insert(CxC(4, 4));
    return g;
  }();
  return s;
}

const GroupSet& cubic_groups() {
  static const GroupSet s = [] {
    GroupSet g = cyclic_range({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14, 18, 21});
    for (int m : {1, 2, 3, 4, 7}) g.insert(CxC(2, 2 * m));
    return g;
  }();
  return s;
}

const GroupSet& galois_v4_groups() {
  static const GroupSet s = [] {
    GroupSet g = cyclic_range({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16});
    for (int m : {1, 2, 3, 4, 5, 6, 8}) g.insert(CxC(2, 2 * m));
    g.insert(CxC(3, 3));
    g.insert(CxC(3, 6));
    g.insert(CxC(4, 4));
    g.insert(CxC(4, 8));
    g.insert(CxC(6, 6));
    return g;
  }();
  return s;
}

const GroupSet& galois_c4_groups() {
  static const GroupSet s = [] {
    GroupSet g = cyclic_range({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 15, 16});
    for (int m : {1, 2, 3, 4, 5, 6, 8}) g.insert(CxC(2, 2 * m));
    g.insert(CxC(5, 5));
    return g;
  }();
  return s;
}

const GroupSet& infinite_groups_deg3() {
  static const GroupSet s = [] {
    GroupSet g = cyclic_range({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 20});
    for (int m = 1; m <= 7; ++m) g.insert(CxC(2, 2 * m));
    return g;
  }();
  return s;
}

const GroupSet& infinite_groups_deg4() {
  static const GroupSet s = [] {
    GroupSet g = cyclic_range(
        {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 20, 21, 22, 24});
    for (int m = 1; m <= 9; ++m) g.insert(CxC(2, 2 * m));
    for (int m = 1; m <= 3; ++m) g.insert(CxC(3, 3 * m));
    g.insert(CxC(4, 4));
    g.insert(CxC(4, 8));
    g.insert(CxC(5, 5));
    g.insert(CxC(6, 6));
    return g;
  }();
  return s;
}

const GroupSet& quartic_star_groups() {
  static const GroupSet s = [] {
    GroupSet g = cyclic_range({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 15, 16, 20, 24});
    for (int m : {1, 2, 3, 4, 5, 6, 8}) g.insert(CxC(2, 2 * m));
    g.insert(CxC(3, 3));
    g.insert(CxC(3, 6));
    g.insert(CxC(4, 4));
    g.insert(CxC(4, 8));
    g.insert(CxC(5, 5));
    g.insert(CxC(6, 6));
    return g;
  }();
  return s;
}

const GroupSet& quartic_infinite_groups() {
  static const GroupSet s = [] {
    GroupSet g = quartic_star_groups();
    g.erase(C(15));
    return g;
  }();
  return s;
}

const GroupSet& quartic_star_groups_for(const TorsionStructure& G) {
  static const std::map<TS, GroupSet> m = [] {
    std::map<TS, GroupSet> t;
    t[C(1)] = merge(cyclic_range({1, 3, 5, 7, 9, 13, 15}), {CxC(3, 3), CxC(5, 5)});
    t[C(2)] = merge(cyclic_range({2, 4, 6, 8, 10, 12, 16, 20, 24}),
                    {CxC(2, 2), CxC(2, 4), CxC(2, 6), CxC(2, 8), CxC(2, 10), CxC(2, 12),
                     CxC(2, 16), CxC(3, 6), CxC(4, 4), CxC(4, 8), CxC(6, 6)});
    t[C(3)] = merge(cyclic_range({3, 15}), {CxC(3, 3)});
    t[C(4)] = merge(cyclic_range({4, 8, 12, 16, 24}),
                    {CxC(2, 4), CxC(2, 8), CxC(2, 12), CxC(2, 16), CxC(4, 4), CxC(4, 8)});
    t[C(5)] = merge(cyclic_range({5, 15}), {CxC(5, 5)});
    t[C(6)] = merge(cyclic_range({6, 12, 24}),
                    {CxC(2, 6), CxC(2, 12), CxC(3, 6), CxC(6, 6)});
    t[C(7)] = cyclic_range({7});
    t[C(8)] = merge(cyclic_range({8, 16}), {CxC(2, 8), CxC(2, 16), CxC(4, 8)});
    t[C(9)] = cyclic_range({9});
    t[C(10)] = merge(cyclic_range({10, 20}), {CxC(2, 10)});
    t[C(12)] = merge(cyclic_range({12, 24}), {CxC(2, 12)});
    t[CxC(2, 2)] = GroupSet{CxC(2, 2), CxC(2, 4), CxC(2, 6), CxC(2, 8),
                            CxC(2, 12), CxC(2, 16), CxC(4, 4), CxC(4, 8)};
    t[CxC(2, 4)] = GroupSet{CxC(2, 4), CxC(2, 8), CxC(2, 16), CxC(4, 4), CxC(4, 8)};
    t[CxC(2, 6)] = GroupSet{CxC(2, 6), CxC(2, 12)};
    t[CxC(2, 8)] = GroupSet{CxC(2, 8), CxC(2, 16), CxC(4, 8)};
    return t;
  }();
  auto it = m.find(G);
  if (it == m.end()) throw std::invalid_argument("G not in the rational list: " + G.name());
  return it->second;
}

const GroupSet& cm_groups(int degree) {
  static const std::vector<GroupSet> v = [] {
    std::vector<GroupSet> t(8);
    t[1] = merge(cyclic_range({1, 2, 3, 4, 6}), {CxC(2, 2)});
    t[2] = merge(t[1], merge(cyclic_range({7, 10}), {CxC(2, 4), CxC(2, 6), CxC(3, 3)}));
    t[3] = merge(t[1], cyclic_range({9, 14}));
    t[4] = merge(t[2], merge(cyclic_range({5, 8, 12, 13, 21}),
                             {CxC(2, 8), CxC(2, 10), CxC(3, 6), CxC(4, 4)}));
    t[5] = merge(t[1], cyclic_range({11}));
    t[6] = merge(merge(t[2], t[3]),
                 merge(cyclic_range({18, 19, 26}), {CxC(2, 14), CxC(3, 6), CxC(3, 9), CxC(6, 6)}));
    t[7] = t[1];
    return t;
  }();
  if (degree < 1 || degree > 7) throw std::invalid_argument("CM table covers degrees 1..7");
  return v[degree];
}

const std::vector<SutherlandRow>& mod_p_image_data() {
  static const std::vector<SutherlandRow> v = {
      {3, "3Cs.1.1", 1, 1, 2}, {3, "3Cs", 1, 2, 4},      {3, "3B.1.1", 1, 1, 6},
      {3, "3B.1.2", 1, 2, 6},  {3, "3Ns", 2, 4, 8},      {3, "3B", 1, 2, 12},
      {3, "3Nn", 4, 8, 16},    {5, "5Cs.1.1", 1, 1, 4},  {5, "5Cs.1.3", 1, 2, 4},
      {5, "5Cs.4.1", 1, 2, 8}, {5, "5Ns.2.1", 2, 8, 16}, {5, "5Cs", 1, 4, 16},
      {5, "5B.1.1", 1, 1, 20}, {5, "5B.1.2", 1, 4, 20},  {5, "5B.1.4", 1, 2, 20},
      {5, "5B.1.3", 1, 4, 20}, {5, "5Ns", 2, 8, 32},     {5, "5B.4.1", 1, 2, 40},
      {5, "5B.4.2", 1, 4, 40}, {5, "5Nn", 6, 24, 48},    {5, "5B", 1, 4, 80},
      {5, "5S4", 6, 24, 96}};
  return v;
}

const std::vector<Rat>& c15_j_invariants() {
  static const std::vector<Rat> v = {
      Rat(-25, 2), Rat(Int(-25) * 13997521, 8), Rat(Int(-5) * 24389, 32),
      Rat(Int(5) * 9393931, 32768)};
  return v;
}

const std::vector<TS>& table1_rows() {
  static const std::vector<TS> v = [] {
    std::vector<TS> r;
    for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 20, 21, 22, 24})
      r.push_back(C(n));
    for (int m = 1; m <= 9; ++m) r.push_back(CxC(2, 2 * m));
    for (int m = 1; m <= 3; ++m) r.push_back(CxC(3, 3 * m));
    r.push_back(CxC(4, 4));
    r.push_back(CxC(4, 8));
    r.push_back(CxC(5, 5));
    r.push_back(CxC(6, 6));
    return r;
  }();
  return v;
}

}  // namespace tables

namespace {

struct Rule {
  std::string id;
  bool (*fires)(const TorsionStructure& G, const TorsionStructure& H);
};

// Exclusion rules as predicates on (G, H) = (torsion over Q, torsion over K).
// The order matches the numbering used by the machine-readable table output.
const std::vector<Rule>& rules() {
  using TSn = TorsionStructure;
  static const std::vector<Rule> v = {
      // no 2-torsion over Q means none over any quartic
      {"teo-1", [](const TSn& G, const TSn& H) { return G.b % 2 != 0 && H.b % 2 == 0; }},
      // 11 and 17 never divide |H|
      {"teo-2", [](const TSn&, const TSn& H) {
         return H.order() % 11 == 0 || H.order() % 17 == 0;
       }},
      // C14 and C2xC14 do not occur over quartics
      {"teo-3", [](const TSn&, const TSn& H) { return H.b % 14 == 0; }},
      // no 21-torsion over quartics
      {"teo-4", [](const TSn&, const TSn& H) { return H.b % 21 == 0; }},
      // C4 over Q blocks C20
      {"teo-5", [](const TSn& G, const TSn& H) { return G.b % 4 == 0 && H.b % 20 == 0; }},
      // C8 over Q blocks C24
      {"teo-6", [](const TSn& G, const TSn& H) { return G.b % 8 == 0 && H.b % 24 == 0; }},
      // full 2-torsion over Q blocks C2xC10
      {"teo-7", [](const TSn& G, const TSn& H) {
         return G.a % 2 == 0 && H.a % 2 == 0 && H.b % 10 == 0;
       }},
      // C2xC4 over Q blocks C2xC12
      {"teo-8", [](const TSn& G, const TSn& H) {
         return G.a % 2 == 0 && G.b % 4 == 0 && H.a % 2 == 0 && H.b % 12 == 0;
       }},
      // C6xC6 only above G = C2 or C6
      {"teo-9", [](const TSn& G, const TSn& H) {
         return H == TSn(6, 6) && !(G == TSn::cyclic(2) || G == TSn::cyclic(6));
       }},
      // 9-torsion descends to a proper subfield: C18 and C3xC9 impossible
      {"teo-11", [](const TSn&, const TSn& H) {
         return H.b % 18 == 0 || (H.a % 3 == 0 && H.b % 9 == 0);
       }},
      // G = C3 blocks C9
      {"teo-12", [](const TSn& G, const TSn& H) {
         return G == TSn::cyclic(3) && H.b % 9 == 0;
       }},
  };
  return v;
}

}  // namespace

RuleVerdict rule_filter(const TorsionStructure& G, const TorsionStructure& H) {
  if (!subgroup_of(G, H)) return {RuleVerdict::kNotSupergroup, ""};
  for (const Rule& r : rules())
    if (r.fires(G, H)) return {RuleVerdict::kRuledOut, r.id};
  return {RuleVerdict::kAllowed, ""};
}

std::vector<std::vector<Table1Cell>> generate_table1() {
  const auto& rows = tables::table1_rows();
  const auto& cols = tables::rational_groups();
  std::vector<std::vector<Table1Cell>> out(rows.size(), std::vector<Table1Cell>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    GroupSet allowed;
    for (size_t i = 0; i < rows.size(); ++i) {
      RuleVerdict v = rule_filter(cols[j], rows[i]);
      switch (v.kind) {
        case RuleVerdict::kNotSupergroup:
          out[i][j].text = "-";
          break;
        case RuleVerdict::kRuledOut:
          out[i][j].text = v.rule_id;
          break;
        case RuleVerdict::kAllowed:
          out[i][j].text = "ok";
          allowed.insert(rows[i]);
          break;
      }
    }
    if (allowed != tables::quartic_star_groups_for(cols[j]))
      throw std::logic_error("regenerated table disagrees with the stored sets at G = " +
                             cols[j].name());
  }
  return out;
}

void check_table_invariants() {
  using namespace tables;
  // star set = infinite deg-4 set minus the nine excluded groups
  GroupSet expected = infinite_groups_deg4();
  for (const TS& g :
       {C(11), C(14), C(17), C(18), C(21), C(22), CxC(2, 14), CxC(2, 18), CxC(3, 9)})
    expected.erase(g);
  if (expected != quartic_star_groups())
    throw std::logic_error("quartic star set inconsistent with the infinite deg-4 set");

  GroupSet star_union;
  for (const TS& G : rational_groups()) {
    const GroupSet& s = quartic_star_groups_for(G);
    for (const TS& H : s) {
      if (!subgroup_of(G, H))
        throw std::logic_error("stored set contains a non-supergroup for " + G.name());
      if (!quartic_star_groups().count(H))
        throw std::logic_error("stored set leaks outside the quartic star set");
      star_union.insert(H);
    }
  }
  if (star_union != quartic_star_groups())
    throw std::logic_error("union over G of the stored sets misses part of the star set");

  GroupSet inf = quartic_star_groups();
  inf.erase(C(15));
  if (inf != quartic_infinite_groups())
    throw std::logic_error("infinite quartic set must be the star set minus C15");

  for (const auto& row : mod_p_image_data()) {
    if (row.d % row.d1 != 0 || row.d0 > row.d1)
      throw std::logic_error("mod-p image data fails d1 | d, d0 <= d1 at " + row.label);
  }

  GroupSet rows_set(table1_rows().begin(), table1_rows().end());
  if (rows_set != infinite_groups_deg4())
    throw std::logic_error("table rows differ from the infinite deg-4 set");

  generate_table1();  // throws if any column disagrees
}

}  // namespace qtors
