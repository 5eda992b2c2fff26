#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qtors/curve.hpp"

namespace qtors {

struct CurveRecord {
  std::string label;  // e.g. "50a2"
  long conductor = 0;
  std::array<long, 5> a_invariants{};  // a1, a2, a3, a4, a6
  int rank = 0;
  std::optional<int> stated_torsion_order;

  EllipticCurve<Rat> curve() const;
};

struct IngestReport {
  std::vector<CurveRecord> records;
  std::vector<std::pair<int, std::string>> bad_lines;  // line number, message
};

/// Parses the whitespace-separated table format
///   conductor class_id class_number [a1,a2,a3,a4,a6] rank torsion_order
/// Empty lines and '#' comments are skipped; malformed lines are reported
/// with their line numbers. Throws on an unreadable file or zero records.
IngestReport ingest_db(const std::string& path);

/// Parse "[a1,a2,a3,a4,a6]" into a curve.
std::optional<EllipticCurve<Rat>> parse_curve_literal(const std::string& text);

/// Find a record by label.
const CurveRecord* find_label(const std::vector<CurveRecord>& db, const std::string& label);

}  // namespace qtors
