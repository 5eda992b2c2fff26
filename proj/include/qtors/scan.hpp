#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtors/cremona.hpp"
#include "qtors/torsion.hpp"

namespace qtors {

/// Multiset of growth structures realized by one curve over pairwise
/// non-isomorphic minimal fields, keyed by the rational torsion G.
struct Configuration {
  TorsionStructure base;
  std::vector<TorsionStructure> entries;  // sorted

  int size() const { return (int)entries.size(); }
  /// Exponent notation, e.g. "(4)^2,(6),(12)^2,(2,2),(2,4)^2,(2,6)".
  std::string str() const;
  auto operator<=>(const Configuration&) const = default;
};

Configuration configuration_of(const GrowthResult& g);

struct ScanRow {
  std::string label;
  Configuration config;
};

struct ScanResult {
  // per G: configuration -> exemplar labels (sorted, deduplicated)
  std::map<TorsionStructure, std::map<Configuration, std::vector<std::string>>> by_base;
  std::vector<std::pair<std::string, std::string>> failures;  // label, reason
  int max_configuration_size = 0;  // the h-bound witnessed by this scan
};

/// Growth scan over a curve list; parallel across curves, deterministic
/// fold. Per-curve failures are quarantined, never abort the scan.
ScanResult scan_curves(const std::vector<CurveRecord>& db, long max_conductor, int jobs);

/// The torsion configurations reported for conductors below 350000, used to
/// flag configurations a scan finds that are not on the list ("new").
const std::vector<std::pair<TorsionStructure, std::string>>& known_configurations();

bool configuration_is_known(const Configuration& c);

}  // namespace qtors
