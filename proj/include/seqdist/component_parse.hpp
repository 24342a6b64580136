#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "seqdist/error.hpp"

namespace seqdist {

/// A run of `repeat_count` copies of `unit`, rendered as count then unit.
struct RunEncodedComponent {
  std::size_t repeat_count = 1;
  std::string unit;

  [[nodiscard]] std::string render() const {
    return std::to_string(repeat_count) + unit;
  }
  [[nodiscard]] std::string expand() const {
    std::string out;
    out.reserve(repeat_count * unit.size());
    for (std::size_t i = 0; i < repeat_count; ++i) {
      out += unit;
    }
    return out;
  }
};

inline RunEncodedComponent run_length_encode(std::string_view component,
                                             std::string_view unit) {
  if (unit.empty() || component.size() % unit.size() != 0) {
    throw NotARepetition("'" + std::string(component) +
                         "' is not a repetition of '" + std::string(unit) + "'");
  }
  for (std::size_t i = 0; i < component.size(); i += unit.size()) {
    if (component.substr(i, unit.size()) != unit) {
      throw NotARepetition("'" + std::string(component) +
                           "' is not a repetition of '" + std::string(unit) +
                           "'");
    }
  }
  return {component.size() / unit.size(), std::string(unit)};
}

/// Insertion-ordered set of component strings.
class ParseDictionary {
public:
  [[nodiscard]] bool contains(std::string_view word) const {
    return index_.find(word) != index_.end();
  }

  void insert(std::string word) {
    if (contains(word)) {
      return;
    }
    longest_ = std::max(longest_, word.size());
    index_.insert(word);
    words_.push_back(std::move(word));
  }

  /// Longest word that is a prefix of `text`; empty if none.
  [[nodiscard]] std::string_view longest_prefix_of(std::string_view text) const {
    for (std::size_t len = std::min(longest_, text.size()); len > 0; --len) {
      if (contains(text.substr(0, len))) {
        return text.substr(0, len);
      }
    }
    return {};
  }

  [[nodiscard]] const std::vector<std::string>& words() const noexcept {
    return words_;
  }

private:
  std::vector<std::string> words_;
  std::set<std::string, std::less<>> index_;
  std::size_t longest_ = 0;
};

struct ParsedComponent {
  std::string text;
  std::optional<RunEncodedComponent> run; ///< set when emitted as a run
};

struct ParsedComponents {
  std::vector<ParsedComponent> components;

  [[nodiscard]] std::size_t unit_count() const noexcept {
    return components.size();
  }

  [[nodiscard]] std::vector<std::string> strings() const {
    std::vector<std::string> out;
    out.reserve(components.size());
    for (const auto& c : components) {
      out.push_back(c.text);
    }
    return out;
  }

  /// Joined with `sep`; runs shown as count+unit when `render_runs` is set.
  [[nodiscard]] std::string render(char sep = '|', bool render_runs = false) const {
    std::string out;
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (i != 0) {
        out.push_back(sep);
      }
      const auto& c = components[i];
      out += (render_runs && c.run) ? c.run->render() : c.text;
    }
    return out;
  }
};

/**
 * Dictionary parse without run-length coding: each component is the shortest
 * prefix of the remaining input not yet in the dictionary. The last
 * component may repeat a dictionary word when input runs out.
 */
inline ParsedComponents parse_without_rle(std::string_view s) {
  if (s.empty()) {
    throw EmptySequence();
  }
  ParsedComponents out;
  ParseDictionary dict;
  std::size_t p = 0;
  while (p < s.size()) {
    std::size_t len = 1;
    while (p + len < s.size() && dict.contains(s.substr(p, len))) {
      ++len;
    }
    std::string comp(s.substr(p, len));
    dict.insert(comp);
    out.components.push_back({std::move(comp), std::nullopt});
    p += len;
  }
  return out;
}

/**
 * Dictionary parse with run-length coding.
 *
 * At each position: a symbol not yet in the dictionary is emitted alone.
 * Otherwise take the longest dictionary word m that prefixes the remaining
 * input and count its consecutive copies r. One more copy is credited when
 * the previous component is m itself. If that total exceeds 3, the r copies
 * are emitted as one run; if not, m is extended a symbol at a time until it
 * leaves the dictionary (or input ends). Every emitted component, runs
 * included, is added to the dictionary.
 */
inline ParsedComponents parse_with_rle(std::string_view s) {
  if (s.empty()) {
    throw EmptySequence();
  }
  constexpr std::size_t kRunThreshold = 3;

  ParsedComponents out;
  ParseDictionary dict;
  std::size_t p = 0;
  while (p < s.size()) {
    const std::string_view rest = s.substr(p);
    if (!dict.contains(rest.substr(0, 1))) {
      std::string comp(rest.substr(0, 1));
      dict.insert(comp);
      out.components.push_back({std::move(comp), std::nullopt});
      ++p;
      continue;
    }

    const std::string_view match = dict.longest_prefix_of(rest);
    std::size_t copies = 0;
    while (rest.substr(copies * match.size(), match.size()) == match) {
      ++copies;
    }
    const bool follows_itself =
        !out.components.empty() && out.components.back().text == match;
    const std::size_t total = copies + (follows_itself ? 1 : 0);

    ParsedComponent comp;
    if (total > kRunThreshold) {
      comp.text = std::string(rest.substr(0, copies * match.size()));
      comp.run = RunEncodedComponent{copies, std::string(match)};
    } else {
      std::size_t len = match.size();
      do {
        ++len;
      } while (len < rest.size() && dict.contains(rest.substr(0, len)));
      comp.text = std::string(rest.substr(0, std::min(len, rest.size())));
    }
    p += comp.text.size();
    dict.insert(comp.text);
    out.components.push_back(std::move(comp));
  }
  return out;
}

struct CurvePoint {
  std::size_t prefix_length = 0;
  std::size_t with_rle = 0;
  std::size_t without_rle = 0;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Both unit counts on prefixes of length step, 2*step, ..., ending at |s|.
inline std::vector<CurvePoint> randomness_curve(std::string_view s,
                                                std::size_t step) {
  if (s.empty()) {
    throw EmptySequence();
  }
  if (step == 0) {
    throw Error("curve step must be at least 1");
  }
  std::vector<CurvePoint> out;
  for (std::size_t len = step;; len += step) {
    len = std::min(len, s.size());
    const auto prefix = s.substr(0, len);
    out.push_back({len, parse_with_rle(prefix).unit_count(),
                   parse_without_rle(prefix).unit_count()});
    if (len == s.size()) {
      break;
    }
  }
  return out;
}

} // namespace seqdist
