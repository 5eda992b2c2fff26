#include "qtors/cremona.hpp"

#include <fstream>
#include <sstream>

namespace qtors {

EllipticCurve<Rat> CurveRecord::curve() const {
  return EllipticCurve<Rat>(Rat(a_invariants[0]), Rat(a_invariants[1]), Rat(a_invariants[2]),
                            Rat(a_invariants[3]), Rat(a_invariants[4]));
}

namespace {

std::optional<std::array<long, 5>> parse_bracket_list(const std::string& s) {
  std::array<long, 5> a{};
  size_t l = s.find('['), r = s.find(']');
  if (l == std::string::npos || r == std::string::npos || r < l) return std::nullopt;
  std::string body = s.substr(l + 1, r - l - 1);
  for (auto& ch : body)
    if (ch == ',') ch = ' ';
  std::istringstream is(body);
  for (int i = 0; i < 5; ++i)
    if (!(is >> a[i])) return std::nullopt;
  long extra;
  if (is >> extra) return std::nullopt;
  return a;
}

}  // namespace

IngestReport ingest_db(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read curve database: " + path);
  IngestReport rep;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    size_t h = trimmed.find('#');
    if (h != std::string::npos) trimmed = trimmed.substr(0, h);
    bool blank = trimmed.find_first_not_of(" \t\r") == std::string::npos;
    if (blank) continue;

    std::istringstream is(trimmed);
    long conductor;
    std::string cls, bracket;
    int number, rank, torsion;
    if (!(is >> conductor >> cls >> number >> bracket >> rank >> torsion)) {
      rep.bad_lines.emplace_back(lineno, "malformed line");
      continue;
    }
    auto a = parse_bracket_list(bracket);
    if (!a) {
      rep.bad_lines.emplace_back(lineno, "bad a-invariant list");
      continue;
    }
    CurveRecord rec;
    rec.conductor = conductor;
    rec.label = std::to_string(conductor) + cls + std::to_string(number);
    rec.a_invariants = *a;
    rec.rank = rank;
    rec.stated_torsion_order = torsion;
    try {
      rec.curve();  // validates nonsingularity
    } catch (const std::exception& e) {
      rep.bad_lines.emplace_back(lineno, std::string("singular model: ") + e.what());
      continue;
    }
    for (const auto& prev : rep.records)
      if (prev.label == rec.label)
        rep.bad_lines.emplace_back(lineno, "duplicate label " + rec.label);
    rep.records.push_back(std::move(rec));
  }
  if (rep.records.empty()) throw std::runtime_error("no valid records in " + path);
  return rep;
}

std::optional<EllipticCurve<Rat>> parse_curve_literal(const std::string& text) {
  auto a = parse_bracket_list(text);
  if (!a) return std::nullopt;
  return EllipticCurve<Rat>(Rat((*a)[0]), Rat((*a)[1]), Rat((*a)[2]), Rat((*a)[3]),
                            Rat((*a)[4]));
}

const CurveRecord* find_label(const std::vector<CurveRecord>& db, const std::string& label) {
  for (const auto& r : db)
    if (r.label == label) return &r;
  return nullptr;
}

}  // namespace qtors
