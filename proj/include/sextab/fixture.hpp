#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sextab {

enum class RecordKind { Reading, Preserved, Erratum };

// One attested cell of a tablet line.
struct FixtureRecord {
  char text = 'A';
  std::string line;
  std::string column;
  std::string digits;  // pattern mini-language
  RecordKind kind = RecordKind::Reading;
  std::map<std::string, std::string> attrs;
  int source_line = 0;

  std::optional<long> attr_int(const std::string& key) const;
  bool has(const std::string& key) const { return attrs.count(key) != 0; }
};

std::vector<FixtureRecord> parse_fixture(std::istream& in);
std::vector<FixtureRecord> load_fixture(const std::string& path);

// The fixture compiled into the library.
std::string_view embedded_fixture_text();
const std::vector<FixtureRecord>& embedded_fixture();

// Path from SEXTAB_FIXTURE if set, otherwise the embedded copy.
std::vector<FixtureRecord> default_fixture();

}  // namespace sextab
