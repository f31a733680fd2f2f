#include "sextab/fixture.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sextab/error.hpp"

namespace sextab {

std::optional<long> FixtureRecord::attr_int(const std::string& key) const {
  auto it = attrs.find(key);
  if (it == attrs.end()) return std::nullopt;
  return std::stol(it->second);
}

std::vector<FixtureRecord> parse_fixture(std::istream& in) {
  std::vector<FixtureRecord> out;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (raw.empty() || raw[0] == '#') continue;
    std::istringstream ss(raw);
    std::string text, line, column, digits, ann;
    if (!(ss >> text >> line >> column >> digits >> ann) || text.size() != 1 ||
        text[0] < 'A' || text[0] > 'M')
      throw Error(Errc::FormatError, "fixture line " + std::to_string(lineno), lineno);
    FixtureRecord r;
    r.text = text[0];
    r.line = line;
    r.column = column;
    r.digits = digits;
    r.source_line = lineno;
    std::istringstream parts(ann);
    std::string part;
    std::getline(parts, part, ',');
    if (part == "reading") r.kind = RecordKind::Reading;
    else if (part == "preserved") r.kind = RecordKind::Preserved;
    else if (part == "erratum") r.kind = RecordKind::Erratum;
    else throw Error(Errc::FormatError, "fixture kind '" + part + "'", lineno);
    while (std::getline(parts, part, ',')) {
      auto eq = part.find('=');
      if (eq == std::string::npos)
        throw Error(Errc::FormatError, "fixture attribute '" + part + "'", lineno);
      r.attrs[part.substr(0, eq)] = part.substr(eq + 1);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<FixtureRecord> load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::FormatError, "cannot open fixture " + path);
  return parse_fixture(in);
}

const std::vector<FixtureRecord>& embedded_fixture() {
  static const std::vector<FixtureRecord> records = [] {
    std::istringstream in{std::string(embedded_fixture_text())};
    return parse_fixture(in);
  }();
  return records;
}

std::vector<FixtureRecord> default_fixture() {
  if (const char* p = std::getenv("SEXTAB_FIXTURE"); p && *p) return load_fixture(p);
  return embedded_fixture();
}

}  // namespace sextab
