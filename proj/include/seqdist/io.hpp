#pragma once

#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "seqdist/core.hpp"
#include "seqdist/grid.hpp"

namespace seqdist {

struct FastaRecord {
  std::string name;
  std::string sequence;
};

/**
 * Minimal FASTA: '>' header lines, sequence lines concatenated with
 * whitespace dropped. CRLF line ends are accepted. The record name is the
 * header text up to the first whitespace.
 */
inline std::vector<FastaRecord> parse_fasta(std::string_view text) {
  std::vector<FastaRecord> records;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (!line.empty() && line.front() == '>') {
      std::istringstream header(line.substr(1));
      FastaRecord r;
      header >> r.name;
      if (r.name.empty()) {
        throw MalformedFasta("empty record name on line " +
                             std::to_string(line_no));
      }
      records.push_back(std::move(r));
      continue;
    }
    if (line.find_first_not_of(" \t") == std::string::npos) {
      continue;
    }
    if (records.empty()) {
      throw MalformedFasta("sequence data before the first '>' header on line " +
                           std::to_string(line_no));
    }
    for (char c : line) {
      if (c != ' ' && c != '\t') {
        records.back().sequence.push_back(c);
      }
    }
  }
  if (records.empty()) {
    throw MalformedFasta("no FASTA records found");
  }
  return records;
}

/**
 * Sequence text from file content. FASTA content yields its first record.
 * Otherwise line breaks are dropped, and for non-text alphabets all other
 * whitespace as well.
 */
inline std::string sequence_text(std::string_view content,
                                 bool keep_inner_spaces) {
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && content[first] == '>') {
    return parse_fasta(content).front().sequence;
  }
  std::string out;
  for (char c : content) {
    if (c == '\n' || c == '\r') continue;
    if (!keep_inner_spaces && (c == ' ' || c == '\t')) continue;
    out.push_back(c);
  }
  return out;
}

/**
 * Square PHYLIP distance matrix: taxon count, then one line per taxon with
 * the name left-justified in 10 columns followed by " value" per column.
 * Names longer than 10 characters are truncated.
 */
inline std::string render_phylip(const std::vector<std::string>& names,
                                 const Grid<std::int64_t>& m) {
  std::ostringstream out;
  out << names.size() << '\n';
  for (std::size_t i = 0; i < names.size(); ++i) {
    out << std::left << std::setw(10) << names[i].substr(0, 10);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << ' ' << m(i, j);
    }
    out << '\n';
  }
  return out.str();
}

} // namespace seqdist
