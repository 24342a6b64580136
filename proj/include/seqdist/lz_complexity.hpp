#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqdist/core.hpp"
#include "seqdist/grid.hpp"

namespace seqdist {

/// Exhaustive production history of a sequence.
struct ComponentHistory {
  std::vector<std::string> components;
  std::string source;

  [[nodiscard]] std::size_t count() const noexcept { return components.size(); }

  /// Components joined with '.', e.g. "A.AC.G".
  [[nodiscard]] std::string render(char sep = '.') const {
    std::string out;
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (i != 0) {
        out.push_back(sep);
      }
      out += components[i];
    }
    return out;
  }
};

/**
 * Left-to-right LZ76 parse. From position p the component is the shortest
 * s[p..q] that has no copy starting before p (copies may run into the
 * component itself). A reproducible tail at end of input is emitted as the
 * last component.
 */
inline ComponentHistory exhaustive_history(std::string_view s) {
  if (s.empty()) {
    throw EmptySequence();
  }
  ComponentHistory h;
  h.source = std::string(s);
  const std::size_t n = s.size();
  std::size_t p = 0;
  while (p < n) {
    // Longest copy of s[p..] starting at some k < p.
    std::size_t longest = 0;
    for (std::size_t k = 0; k < p && longest < n - p; ++k) {
      std::size_t len = 0;
      while (p + len < n && s[k + len] == s[p + len]) {
        ++len;
      }
      longest = std::max(longest, len);
    }
    const std::size_t len = std::min(longest + 1, n - p);
    h.components.emplace_back(s.substr(p, len));
    p += len;
  }
  return h;
}

inline std::size_t lz_complexity_count(std::string_view s) {
  return exhaustive_history(s).count();
}

/// Counts and concatenation distances for an ordered pair (a, b).
struct LZDistanceReport {
  std::size_t c_a = 0;
  std::size_t c_b = 0;
  std::size_t c_ab = 0;
  std::size_t c_ba = 0;
  std::int64_t d = 0;      ///< max(C(ab) - C(a), C(ba) - C(b))
  std::int64_t d_star = 0; ///< (C(ab) - C(a)) + (C(ba) - C(b))
};

enum class LZMeasure { d, d_star };

inline std::string_view to_string(LZMeasure m) noexcept {
  return m == LZMeasure::d ? "d" : "d_star";
}

namespace detail {

inline LZDistanceReport lz_report_from_counts(std::size_t c_a, std::size_t c_b,
                                              std::size_t c_ab,
                                              std::size_t c_ba) {
  LZDistanceReport r{c_a, c_b, c_ab, c_ba, 0, 0};
  const auto inc_a = static_cast<std::int64_t>(c_ab) - static_cast<std::int64_t>(c_a);
  const auto inc_b = static_cast<std::int64_t>(c_ba) - static_cast<std::int64_t>(c_b);
  r.d = std::max(inc_a, inc_b);
  r.d_star = inc_a + inc_b;
  return r;
}

inline void require_lz_pair(const Sequence& a, const Sequence& b) {
  if (a.empty() || b.empty()) {
    throw EmptySequence();
  }
  if (!(a.alphabet() == b.alphabet())) {
    throw AlphabetMismatch();
  }
}

} // namespace detail

inline LZDistanceReport lz_distance_report(const Sequence& a,
                                           const Sequence& b) {
  detail::require_lz_pair(a, b);
  return detail::lz_report_from_counts(
      lz_complexity_count(a), lz_complexity_count(b),
      lz_complexity_count(a.str() + b.str()),
      lz_complexity_count(b.str() + a.str()));
}

inline LZDistanceReport otu_sayood_d(const Sequence& a, const Sequence& b) {
  return lz_distance_report(a, b);
}

inline LZDistanceReport otu_sayood_d_star(const Sequence& a,
                                          const Sequence& b) {
  return lz_distance_report(a, b);
}

/// Pairwise measure over a set. The diagonal is measure(x, x), not forced to 0.
inline Grid<std::int64_t> lz_distance_matrix(std::span<const Sequence> set,
                                             LZMeasure measure) {
  if (set.size() < 2) {
    throw Error("distance matrix needs at least two sequences");
  }
  for (const auto& s : set) {
    detail::require_lz_pair(set.front(), s);
  }
  std::vector<std::size_t> single(set.size());
  std::transform(set.begin(), set.end(), single.begin(),
                 [](const Sequence& s) { return lz_complexity_count(s); });

  Grid<std::int64_t> out(set.size(), set.size(), 0);
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i; j < set.size(); ++j) {
      const auto r = detail::lz_report_from_counts(
          single[i], single[j],
          lz_complexity_count(set[i].str() + set[j].str()),
          lz_complexity_count(set[j].str() + set[i].str()));
      const std::int64_t v = measure == LZMeasure::d ? r.d : r.d_star;
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return out;
}

} // namespace seqdist
