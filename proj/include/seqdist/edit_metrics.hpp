#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <string_view>
#include <vector>

#include "seqdist/core.hpp"
#include "seqdist/grid.hpp"

namespace seqdist {

enum class EditMethod { hamming, levenshtein, osa, damerau_levenshtein };

inline std::string_view to_string(EditMethod m) noexcept {
  switch (m) {
  case EditMethod::hamming: return "hamming";
  case EditMethod::levenshtein: return "levenshtein";
  case EditMethod::osa: return "osa";
  case EditMethod::damerau_levenshtein: return "damerau_levenshtein";
  }
  return "?";
}

struct EditDistanceReport {
  std::size_t distance = 0;
  EditMethod method = EditMethod::levenshtein;
};

/// Number of positions at which equal-length sequences differ.
inline std::size_t hamming(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) {
    throw LengthMismatch(a.size(), b.size());
  }
  return static_cast<std::size_t>(std::inner_product(
      a.begin(), a.end(), b.begin(), std::size_t{0}, std::plus<>{},
      [](char x, char y) { return static_cast<std::size_t>(x != y); }));
}

inline std::size_t hamming(const Sequence& a, const Sequence& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw AlphabetMismatch();
  }
  return hamming(a.view(), b.view());
}

/// Unit-cost insert/delete/substitute distance. Two rows of memory.
inline std::size_t levenshtein(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) {
    std::swap(a, b);
  }
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> cur(b.size() + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

/**
 * Optimal string alignment distance: Levenshtein plus adjacent transposition,
 * where a transposed pair is never edited again. Not a metric.
 */
inline std::size_t osa(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) {
    std::swap(a, b);
  }
  const std::size_t m = b.size();
  std::vector<std::size_t> prev2(m + 1);
  std::vector<std::size_t> prev(m + 1);
  std::vector<std::size_t> cur(m + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      std::size_t best = std::min({prev[j - 1] + cost, prev[j] + 1,
                                   cur[j - 1] + 1});
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
        best = std::min(best, prev2[j - 2] + 1);
      }
      cur[j] = best;
    }
    std::swap(prev2, prev);
    std::swap(prev, cur);
  }
  return prev[m];
}

/**
 * Unrestricted Damerau-Levenshtein distance (Lowrance-Wagner recurrence).
 * Substrings may be edited after being transposed, so this is a metric.
 * The last-occurrence table is indexed by byte value.
 */
inline std::size_t damerau_levenshtein(std::string_view a, std::string_view b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  const std::size_t inf = n + m;
  Grid<std::size_t> d(n + 2, m + 2, 0);
  d(0, 0) = inf;
  for (std::size_t i = 0; i <= n; ++i) {
    d(i + 1, 0) = inf;
    d(i + 1, 1) = i;
  }
  for (std::size_t j = 0; j <= m; ++j) {
    d(0, j + 1) = inf;
    d(1, j + 1) = j;
  }
  std::array<std::size_t, 256> last_row{};
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t last_match_col = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t i1 = last_row[static_cast<unsigned char>(b[j - 1])];
      const std::size_t j1 = last_match_col;
      std::size_t cost = 1;
      if (a[i - 1] == b[j - 1]) {
        cost = 0;
        last_match_col = j;
      }
      d(i + 1, j + 1) =
          std::min({d(i, j) + cost, d(i + 1, j) + 1, d(i, j + 1) + 1,
                    d(i1, j1) + (i - i1 - 1) + 1 + (j - j1 - 1)});
    }
    last_row[static_cast<unsigned char>(a[i - 1])] = i;
  }
  return d(n + 1, m + 1);
}

inline EditDistanceReport edit_distance(const Sequence& a, const Sequence& b,
                                        EditMethod method) {
  switch (method) {
  case EditMethod::hamming: return {hamming(a, b), method};
  case EditMethod::levenshtein: return {levenshtein(a, b), method};
  case EditMethod::osa: return {osa(a, b), method};
  case EditMethod::damerau_levenshtein:
    return {damerau_levenshtein(a, b), method};
  }
  return {0, method};
}

} // namespace seqdist
