#include "qtors/scan.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace qtors {

std::string Configuration::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < entries.size();) {
    size_t j = i;
    while (j < entries.size() && entries[j] == entries[i]) ++j;
    if (i) os << ",";
    os << entries[i].compact();
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

Configuration configuration_of(const GrowthResult& g) {
  Configuration c;
  c.base = g.base;
  for (const auto& e : g.entries)
    if (e.minimal) c.entries.push_back(e.structure);
  std::sort(c.entries.begin(), c.entries.end());
  return c;
}

ScanResult scan_curves(const std::vector<CurveRecord>& db, long max_conductor, int jobs) {
  std::vector<const CurveRecord*> work;
  for (const auto& r : db)
    if (max_conductor <= 0 || r.conductor <= max_conductor) work.push_back(&r);

  struct Slot {
    bool ok = false;
    Configuration config;
    std::string error;
  };
  std::vector<Slot> slots(work.size());

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= work.size()) return;
      try {
        GrowthResult g = growth_fields(work[i]->curve());
        slots[i].config = configuration_of(g);
        slots[i].ok = true;
      } catch (const std::exception& e) {
        slots[i].error = e.what();
      }
    }
  };
  if (jobs < 1) jobs = 1;
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  ScanResult out;
  for (size_t i = 0; i < work.size(); ++i) {
    if (!slots[i].ok) {
      out.failures.emplace_back(work[i]->label, slots[i].error);
      continue;
    }
    auto& labels = out.by_base[slots[i].config.base][slots[i].config];
    labels.push_back(work[i]->label);
    out.max_configuration_size = std::max(out.max_configuration_size, slots[i].config.size());
  }
  for (auto& [base, configs] : out.by_base)
    for (auto& [cfg, labels] : configs) std::sort(labels.begin(), labels.end());
  std::sort(out.failures.begin(), out.failures.end());
  return out;
}

namespace {

// "(2,4)^3,(2,8),(4,4)" -> sorted structure list
std::vector<TorsionStructure> parse_compact_list(const std::string& s) {
  std::vector<TorsionStructure> out;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw std::invalid_argument("bad configuration: " + s);
    size_t close = s.find(')', i);
    std::string body = s.substr(i + 1, close - i - 1);
    int a = 1, b = 0;
    size_t comma = body.find(',');
    if (comma == std::string::npos) {
      b = std::stoi(body);
    } else {
      a = std::stoi(body.substr(0, comma));
      b = std::stoi(body.substr(comma + 1));
    }
    i = close + 1;
    int mult = 1;
    if (i < s.size() && s[i] == '^') {
      size_t j = i + 1;
      while (j < s.size() && isdigit((unsigned char)s[j])) ++j;
      mult = std::stoi(s.substr(i + 1, j - i - 1));
      i = j;
    }
    for (int k = 0; k < mult; ++k) out.emplace_back(a, b);
    if (i < s.size() && s[i] == ',') ++i;
  }
  std::sort(out.begin(), out.end());
  return out;
}

TorsionStructure parse_compact_one(const std::string& s) {
  auto v = parse_compact_list(s);
  if (v.size() != 1) throw std::invalid_argument("bad structure: " + s);
  return v[0];
}

}  // namespace

const std::vector<std::pair<TorsionStructure, std::string>>& known_configurations() {
  static const std::vector<std::pair<TorsionStructure, std::string>> v = [] {
    // base group, configuration (exemplars of every configuration reported
    // for conductor < 350000)
    const std::pair<const char*, const char*> raw[] = {
        {"(1)", "(3)"}, {"(1)", "(5)"}, {"(1)", "(7)"}, {"(1)", "(9)"}, {"(1)", "(13)"},
        {"(1)", "(3)^2"}, {"(1)", "(3),(5)"}, {"(1)", "(3),(15)"}, {"(1)", "(5)^2"},
        {"(1)", "(5),(5,5)"}, {"(1)", "(3)^2,(5)"}, {"(1)", "(3),(5),(15)"},
        {"(1)", "(3)^2,(3,3)"},
        {"(2)", "(4),(2,2)"}, {"(2)", "(4),(2,6)"}, {"(2)", "(4),(2,10)"},
        {"(2)", "(2,2),(2,4)"}, {"(2)", "(4),(10),(2,2)"}, {"(2)", "(4),(2,2),(2,4)"},
        {"(2)", "(4),(2,2),(2,10)"}, {"(2)", "(4),(2,6),(2,12)"},
        {"(2)", "(8),(2,2),(2,4)"}, {"(2)", "(4)^2,(2,2),(2,4)"},
        {"(2)", "(4)^2,(2,2),(4,4)"}, {"(2)", "(4)^2,(2,6),(2,12)"},
        {"(2)", "(4),(6)^2,(2,2)"}, {"(2)", "(4),(6),(2,2),(2,6)"},
        {"(2)", "(4),(6),(2,6),(6,6)"}, {"(2)", "(4),(8),(2,2),(2,8)"},
        {"(2)", "(4),(10),(2,2),(2,10)"}, {"(2)", "(4),(12),(2,2),(2,12)"},
        {"(2)", "(4),(16),(2,2),(2,16)"}, {"(2)", "(6)^2,(2,2),(2,4)"},
        {"(2)", "(6),(12),(2,2),(2,6)"}, {"(2)", "(8)^2,(2,2),(4,8)"},
        {"(2)", "(10),(20),(2,2),(2,10)"}, {"(2)", "(4)^2,(8),(2,2),(2,4)"},
        {"(2)", "(4),(4),(8),(2,2),(4,4)"}, {"(2)", "(4)^2,(2,2),(2,4)^2"},
        {"(2)", "(4)^2,(2,6),(2,12)^2"}, {"(2)", "(4),(6),(2,2),(2,4),(2,6)"},
        {"(2)", "(4),(8),(12),(2,2),(2,12)"}, {"(2)", "(4),(8),(16),(2,2),(2,8)"},
        {"(2)", "(4),(8),(2,2),(2,4),(2,8)"}, {"(2)", "(4),(12),(24),(2,2),(2,12)"},
        {"(2)", "(4),(12),(2,2),(2,4),(2,12)"}, {"(2)", "(4)^2,(8)^2,(2,2),(2,4)"},
        {"(2)", "(4)^2,(8),(2,2),(2,4)^2"}, {"(2)", "(4),(8),(16)^2,(2,2),(2,8)"},
        {"(2)", "(4),(8),(16),(2,2),(2,4),(2,8)"}, {"(2)", "(4)^2,(8)^2,(2,2),(2,4)^2"},
        {"(2)", "(4),(6)^2,(2,2),(2,6)^2,(3,6)"},
        {"(2)", "(4),(8),(16)^2,(2,2),(2,4),(2,8)"},
        {"(2)", "(6)^2,(12),(2,2),(2,6)^2,(3,6)"},
        {"(2)", "(4)^2,(6),(12)^2,(2,2),(2,4),(2,6)"}, {"(2)", "(4)^2,(8)^4,(2,2),(2,4)"},
        {"(2)", "(4)^2,(8)^4,(2,2),(4,4)"}, {"(2)", "(4)^2,(8)^3,(2,2),(2,4)^2"},
        {"(2)", "(4)^2,(6),(8),(12)^2,(2,2),(2,4),(2,6)"},
        {"(2)", "(4)^2,(6),(12)^2,(2,2),(2,4)^2,(2,6)"},
        {"(3)", "(15)"}, {"(3)", "(3,3)"},
        {"(4)", "(8),(2,4)"}, {"(4)", "(8),(2,8)"}, {"(4)", "(8),(2,12)"},
        {"(4)", "(8),(4,4)"}, {"(4)", "(2,4),(2,8)"}, {"(4)", "(8),(2,4),(2,8)"},
        {"(4)", "(8),(2,4),(4,4)"}, {"(4)", "(8),(2,8),(2,16)"},
        {"(4)", "(8)^2,(2,4),(2,8)"}, {"(4)", "(8)^2,(2,8),(4,8)"},
        {"(4)", "(8),(12),(2,4),(2,12)"}, {"(4)", "(12),(24),(2,4),(2,12)"},
        {"(4)", "(8),(8),(16),(2,4),(2,8)"}, {"(4)", "(8)^2,(16)^2,(2,4),(2,8)"},
        {"(4)", "(8)^2,(2,4),(2,8)^2,(4,4)"}, {"(4)", "(8)^2,(16)^3,(2,4),(2,8)"},
        {"(4)", "(8)^2,(16)^2,(2,4),(2,8)^2,(4,4)"},
        {"(5)", "(15)"}, {"(5)", "(5,5)"},
        {"(6)", "(12),(2,6)"}, {"(6)", "(12),(2,6),(2,12)"}, {"(6)", "(12)^2,(2,6),(2,12)"},
        {"(6)", "(12),(2,6),(3,6),(6,6)"}, {"(6)", "(12)^2,(24),(2,6),(2,12)"},
        {"(6)", "(12)^2,(2,6),(2,12)^2"},
        {"(8)", "(16),(2,8)"}, {"(8)", "(16),(2,8),(2,16)"}, {"(8)", "(16),(2,8),(4,8)"},
        {"(8)", "(16)^2,(2,8),(2,16)"},
        {"(10)", "(20),(2,10)"},
        {"(12)", "(24),(2,12)"},
        {"(2,2)", "(2,4)"}, {"(2,2)", "(2,4),(2,8)"}, {"(2,2)", "(2,4),(4,4)"},
        {"(2,2)", "(2,4)^3"}, {"(2,2)", "(2,4)^2,(2,8)"}, {"(2,2)", "(2,4)^2,(2,12)"},
        {"(2,2)", "(2,4)^2,(4,4)"}, {"(2,2)", "(2,4)^2,(4,8)"},
        {"(2,2)", "(2,4),(2,6),(2,12)"}, {"(2,2)", "(2,4),(2,8)^2"},
        {"(2,2)", "(2,4),(2,8),(4,8)"}, {"(2,2)", "(2,4)^3,(2,6)"},
        {"(2,2)", "(2,4)^3,(4,4)"}, {"(2,2)", "(2,4)^2,(2,6),(2,12)"},
        {"(2,2)", "(2,4)^2,(2,8),(2,16)"}, {"(2,2)", "(2,4)^2,(2,8),(4,4)"},
        {"(2,2)", "(2,4)^2,(2,8),(4,8)"}, {"(2,2)", "(2,4),(2,6),(2,12)^2"},
        {"(2,2)", "(2,4)^3,(2,8),(4,4)"}, {"(2,2)", "(2,4)^2,(2,8)^2,(4,4)"},
        {"(2,2)", "(2,4),(2,6),(2,12)^3"}, {"(2,2)", "(2,4)^3,(2,8)^2,(4,4)"},
        {"(2,2)", "(2,4)^2,(2,8)^3,(4,4)"}, {"(2,2)", "(2,4)^3,(2,8)^3,(4,4)"},
        {"(2,2)", "(2,4)^2,(2,8)^4,(4,4)"}, {"(2,2)", "(2,4)^3,(2,8)^4,(4,4)"},
        {"(2,4)", "(2,8),(4,4)"}, {"(2,4)", "(2,8)^2,(4,4)"}, {"(2,4)", "(2,8)^2,(4,8)"},
        {"(2,4)", "(2,8),(2,16),(4,4)"}, {"(2,4)", "(2,8),(4,4),(4,8)"},
        {"(2,4)", "(2,8)^2,(4,4),(4,8)"},
        {"(2,6)", "(2,12)"}, {"(2,6)", "(2,12)^3"},
        {"(2,8)", "(2,16)^2,(4,8)"},
    };
    std::vector<std::pair<TorsionStructure, std::string>> out;
    for (const auto& [g, cfg] : raw) out.emplace_back(parse_compact_one(g), cfg);
    return out;
  }();
  return v;
}

bool configuration_is_known(const Configuration& c) {
  for (const auto& [base, cfg] : known_configurations()) {
    if (base != c.base) continue;
    if (parse_compact_list(cfg) == c.entries) return true;
  }
  return false;
}

}  // namespace qtors
