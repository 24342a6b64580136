#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "seqdist/core.hpp"

namespace seqdist {

/// Hamming distance of `a` against every left rotation of `b`.
struct RotationProfile {
  std::vector<std::size_t> distances; ///< index k: b rotated left by k
  std::size_t best_shift = 0;         ///< least k attaining the minimum
  std::size_t best_distance = 0;
};

struct RotationMinimum {
  std::size_t distance = 0;
  std::size_t shift = 0;
};

/// Position i of the result holds s[(i + k) mod |s|].
inline std::string rotate_left(std::string_view s, std::size_t k) {
  if (s.empty()) {
    throw EmptySequence();
  }
  k %= s.size();
  std::string out;
  out.reserve(s.size());
  out.append(s.substr(k));
  out.append(s.substr(0, k));
  return out;
}

inline Sequence rotate_left(const Sequence& s, std::size_t k) {
  return Sequence{rotate_left(s.view(), k), s.alphabet()};
}

inline RotationProfile rotation_profile(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) {
    throw LengthMismatch(a.size(), b.size());
  }
  if (a.empty()) {
    throw EmptySequence();
  }
  const std::size_t n = a.size();
  RotationProfile p;
  p.distances.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    // a[0, n-k) meets b[k, n); a[n-k, n) meets b[0, k).
    std::size_t d = 0;
    const std::size_t head = n - k;
    for (std::size_t i = 0; i < head; ++i) {
      d += static_cast<std::size_t>(a[i] != b[i + k]);
    }
    for (std::size_t i = head; i < n; ++i) {
      d += static_cast<std::size_t>(a[i] != b[i - head]);
    }
    p.distances[k] = d;
  }
  const auto best = std::min_element(p.distances.begin(), p.distances.end());
  p.best_shift = static_cast<std::size_t>(best - p.distances.begin());
  p.best_distance = *best;
  return p;
}

inline RotationProfile rotation_profile(const Sequence& a, const Sequence& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw AlphabetMismatch();
  }
  return rotation_profile(a.view(), b.view());
}

inline RotationMinimum min_rotation_distance(std::string_view a,
                                             std::string_view b) {
  const RotationProfile p = rotation_profile(a, b);
  return {p.best_distance, p.best_shift};
}

inline RotationMinimum min_rotation_distance(const Sequence& a,
                                             const Sequence& b) {
  const RotationProfile p = rotation_profile(a, b);
  return {p.best_distance, p.best_shift};
}

} // namespace seqdist
