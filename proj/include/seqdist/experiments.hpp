#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqdist/core.hpp"
#include "seqdist/dseq.hpp"
#include "seqdist/edit_metrics.hpp"
#include "seqdist/lzw_codec.hpp"
#include "seqdist/random.hpp"

namespace seqdist {

/// Binary expansion of 1/p over one period. Primes dividing 2 have the
/// terminating expansion 0.1, represented by the single digit "1".
inline std::string binary_reciprocal_digits(std::uint64_t p) {
  if (p == 2) {
    return "1";
  }
  return dseq_digits(p, 2).to_string();
}

struct Table1Row {
  std::uint64_t prime = 0;
  std::size_t length = 0;
  std::size_t code_count = 0;
  std::size_t bits_fixed12 = 0;
  std::size_t bits_fixed_minimal = 0;
  std::size_t bits_variable = 0;

  [[nodiscard]] std::size_t bits(WidthPolicy p) const noexcept {
    switch (p) {
    case WidthPolicy::fixed12: return bits_fixed12;
    case WidthPolicy::fixed_minimal: return bits_fixed_minimal;
    case WidthPolicy::variable: return bits_variable;
    }
    return 0;
  }
  [[nodiscard]] bool expanded(WidthPolicy p) const noexcept {
    return bits(p) >= length;
  }
};

/// LZW size of each binary D-sequence for the primes in [from, to].
inline std::vector<Table1Row> lzw_dseq_table(std::uint64_t from,
                                             std::uint64_t to) {
  std::vector<Table1Row> rows;
  for (std::uint64_t p : primes_in(from, to)) {
    const Sequence s{binary_reciprocal_digits(p), Alphabet::binary()};
    const CodeStream cs = lzw_encode(s, WidthPolicy::fixed_minimal);
    rows.push_back({p, s.size(), cs.codes.size(),
                    compressed_size(cs, WidthPolicy::fixed12).bits,
                    compressed_size(cs, WidthPolicy::fixed_minimal).bits,
                    compressed_size(cs, WidthPolicy::variable).bits});
  }
  return rows;
}

struct ExpansionSummary {
  std::size_t expanded = 0;
  std::size_t total = 0;
  [[nodiscard]] double fraction() const noexcept {
    return total == 0 ? 0.0 : static_cast<double>(expanded) / static_cast<double>(total);
  }
};

inline ExpansionSummary expansion_summary(const std::vector<Table1Row>& rows,
                                          WidthPolicy policy) {
  ExpansionSummary s{0, rows.size()};
  for (const auto& r : rows) {
    s.expanded += r.expanded(policy) ? 1 : 0;
  }
  return s;
}

struct Table2Row {
  std::uint64_t prime = 0;
  std::size_t length = 0;
  std::size_t hamming_before = 0;
  std::size_t bits_dseq = 0;
  std::size_t bits_random = 0;
  std::size_t hamming_after = 0;
};

/// Per-prime generator, independent of which other primes are requested.
inline SeededGenerator generator_for_prime(std::uint64_t seed, std::uint64_t p) {
  return SeededGenerator{seed ^ (p * 0x9E3779B97F4A7C15ULL)};
}

/**
 * Hamming distance between a D-sequence and a seeded random bitstring of the
 * same length, before and after LZW. After coding, both code streams are
 * written as bitstrings under `policy` and cut to the shorter length.
 */
inline std::vector<Table2Row> lzw_hamming_table(std::uint64_t from,
                                                std::uint64_t to,
                                                std::uint64_t seed,
                                                WidthPolicy policy) {
  std::vector<Table2Row> rows;
  for (std::uint64_t p : primes_in(from, to)) {
    const std::string dseq = binary_reciprocal_digits(p);
    auto gen = generator_for_prime(seed, p);
    const std::string random = gen.bits(dseq.size());

    const auto bits_d = to_bitstring(
        lzw_encode(Sequence{dseq, Alphabet::binary()}, policy), policy);
    const auto bits_r = to_bitstring(
        lzw_encode(Sequence{random, Alphabet::binary()}, policy), policy);
    const std::size_t common = std::min(bits_d.size(), bits_r.size());

    rows.push_back({p, dseq.size(), hamming(dseq, random), bits_d.size(),
                    bits_r.size(),
                    hamming(std::string_view(bits_d).substr(0, common),
                            std::string_view(bits_r).substr(0, common))});
  }
  return rows;
}

/**
 * Synthetic inputs for randomness curves:
 *   runs:N          N zeros
 *   periodic:N[:U]  unit U (default "01") repeated, cut to N symbols
 *   random:N        N seeded random bits
 * Returns nullopt for an unrecognised or malformed spec.
 */
inline std::optional<std::string> generate_sequence(std::string_view spec,
                                                    std::uint64_t seed) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    return std::nullopt;
  }
  const std::string_view kind = spec.substr(0, colon);
  std::string_view rest = spec.substr(colon + 1);
  std::string_view unit = "01";
  if (kind == "periodic") {
    if (const auto c2 = rest.find(':'); c2 != std::string_view::npos) {
      unit = rest.substr(c2 + 1);
      rest = rest.substr(0, c2);
    }
    if (unit.empty() || unit.find_first_not_of("01") != std::string_view::npos) {
      return std::nullopt;
    }
  }
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc{} || ptr != rest.data() + rest.size() || n == 0) {
    return std::nullopt;
  }
  if (kind == "runs") {
    return std::string(n, '0');
  }
  if (kind == "random") {
    return SeededGenerator{seed}.bits(n);
  }
  if (kind == "periodic") {
    std::string out;
    out.reserve(n + unit.size());
    while (out.size() < n) {
      out += unit;
    }
    out.resize(n);
    return out;
  }
  return std::nullopt;
}

} // namespace seqdist
