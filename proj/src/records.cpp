#include "pedalwords/records.hpp"

#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

namespace pedalwords::records {

std::string word_field(const words::Word2D& w) {
  std::string out;
  for (int i = 0; i < w.rows(); ++i) {
    if (i > 0) out += '/';
    for (int j = 0; j < w.cols(); ++j) {
      out += static_cast<char>('0' + w.at(i, j));
    }
  }
  return out;
}

words::Word2D parse_word_field(std::string_view text, int alphabet_size) {
  std::string joined;
  joined.reserve(text.size());
  for (char ch : text) {
    joined += ch == '/' ? '\n' : ch;
  }
  return words::parse_word2d(joined, alphabet_size);
}

std::string record_line(const bijection::PeriodicTriangle& t) {
  std::string out = "n=" + std::to_string(t.period);
  out += "\titinerary=" + t.itinerary.str();
  out += "\tword=" + word_field(bijection::eta(t.itinerary));
  out += "\ttriple=" + pedal::format_triple(t.triple);
  return out;
}

const char* fixture_kind_name(FixtureEntry::Kind kind) {
  switch (kind) {
    case FixtureEntry::Kind::Psi2Row2:
      return "psi2_row2";
    case FixtureEntry::Kind::Chi:
      return "chi";
    case FixtureEntry::Kind::PsiTable:
      return "psi_table";
  }
  return "?";
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find('\t', start);
    if (end == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, end - start));
    start = end + 1;
  }
}

std::uint64_t parse_index(const std::string& text, int line_no) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw FormatError("fixture line " + std::to_string(line_no) + ": bad index '" + text + "'");
  }
  const std::uint64_t value = std::stoull(text);
  if (value == 0) {
    throw FormatError("fixture line " + std::to_string(line_no) + ": indices must be positive");
  }
  return value;
}

}  // namespace

std::vector<FixtureEntry> parse_fixture(std::istream& in) {
  std::vector<FixtureEntry> entries;
  std::set<std::tuple<FixtureEntry::Kind, std::vector<std::uint64_t>>> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;

    const std::vector<std::string> fields = split_fields(line);
    FixtureEntry entry;
    std::size_t n_indices = 0;
    if (fields[0] == "psi2_row2") {
      entry.kind = FixtureEntry::Kind::Psi2Row2;
      n_indices = 1;
    } else if (fields[0] == "chi") {
      entry.kind = FixtureEntry::Kind::Chi;
      n_indices = 1;
    } else if (fields[0] == "psi_table") {
      entry.kind = FixtureEntry::Kind::PsiTable;
      n_indices = 2;
    } else {
      throw FormatError("fixture line " + std::to_string(line_no) + ": unknown kind '" +
                        fields[0] + "'");
    }
    if (fields.size() != n_indices + 2) {
      throw FormatError("fixture line " + std::to_string(line_no) + ": expected " +
                        std::to_string(n_indices + 2) + " fields, got " +
                        std::to_string(fields.size()));
    }
    for (std::size_t i = 0; i < n_indices; ++i) {
      entry.indices.push_back(parse_index(fields[1 + i], line_no));
    }
    const std::string& value = fields.back();
    if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
      throw FormatError("fixture line " + std::to_string(line_no) + ": bad value '" + value + "'");
    }
    entry.expected = Integer(value);
    if (!seen.insert({entry.kind, entry.indices}).second) {
      throw FormatError("fixture line " + std::to_string(line_no) + ": duplicate entry");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<FixtureEntry> load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw FormatError("cannot open fixture file '" + path + "'");
  }
  return parse_fixture(in);
}

}  // namespace pedalwords::records
