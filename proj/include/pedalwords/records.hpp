#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pedalwords/bijection.hpp"

namespace pedalwords::records {

// Two-row word as "row1/row2", e.g. "0000011/1111101".
std::string word_field(const words::Word2D& w);
words::Word2D parse_word_field(std::string_view text, int alphabet_size = 2);

// One machine-readable line per object, field order fixed for stable diffs:
// n=<int>\titinerary=<base4>\tword=<row1>/<row2>\ttriple=<a>,<b>,<c>
std::string record_line(const bijection::PeriodicTriangle& t);

// Offline expected-values fixture, one entry per line:
//   kind<TAB>index...<TAB>value
// where kind is psi2_row2 (one index), chi (one index) or psi_table (two
// indices). '#' starts a comment. Duplicate (kind, indices) pairs and
// non-positive indices are rejected.
struct FixtureEntry {
  enum class Kind { Psi2Row2, Chi, PsiTable };

  Kind kind;
  std::vector<std::uint64_t> indices;
  Integer expected;
};

const char* fixture_kind_name(FixtureEntry::Kind kind);

std::vector<FixtureEntry> parse_fixture(std::istream& in);
std::vector<FixtureEntry> load_fixture(const std::string& path);

}  // namespace pedalwords::records
