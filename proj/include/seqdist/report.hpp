#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace seqdist {

enum class Format { csv, tsv, json, phylip };

inline std::optional<Format> parse_format(std::string_view s) {
  if (s == "csv") return Format::csv;
  if (s == "tsv") return Format::tsv;
  if (s == "json") return Format::json;
  if (s == "phylip") return Format::phylip;
  return std::nullopt;
}

/// Column-typed report. Cells are JSON scalars (integers, numbers, strings).
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<nlohmann::ordered_json>> rows;
  /// Trailing summary lines; '#'-prefixed in delimited output.
  std::vector<std::string> notes;
};

namespace detail {

inline std::string delimited_cell(const nlohmann::ordered_json& v, char sep) {
  if (!v.is_string()) {
    return v.dump();
  }
  const auto& s = v.get_ref<const std::string&>();
  if (s.find_first_of(std::string{sep, '"', '\n', '\r'}) == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline std::string render_delimited(const Table& t, char sep) {
  std::string out;
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (i != 0) out.push_back(sep);
    out += t.header[i];
  }
  out.push_back('\n');
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) out.push_back(sep);
      out += delimited_cell(row[i], sep);
    }
    out.push_back('\n');
  }
  for (const auto& note : t.notes) {
    out += "# " + note + "\n";
  }
  return out;
}

} // namespace detail

inline std::string render_json(const Table& t) {
  nlohmann::ordered_json doc;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < t.header.size(); ++i) {
      obj[t.header[i]] = row[i];
    }
    doc["rows"].push_back(std::move(obj));
  }
  if (!t.notes.empty()) {
    doc["notes"] = t.notes;
  }
  return doc.dump(2) + "\n";
}

/// csv, tsv or json. PHYLIP is only meaningful for distance matrices.
inline std::string render(const Table& t, Format f) {
  switch (f) {
  case Format::csv: return detail::render_delimited(t, ',');
  case Format::tsv: return detail::render_delimited(t, '\t');
  case Format::json: return render_json(t);
  case Format::phylip: break;
  }
  return detail::render_delimited(t, ',');
}

} // namespace seqdist
