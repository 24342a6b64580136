#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqdist/core.hpp"

namespace seqdist {

using Code = std::uint32_t;

/// How emitted codes are sized when counting compressed bits.
enum class WidthPolicy {
  fixed12,       ///< 12 bits per code; codebook capped at 4096 entries
  fixed_minimal, ///< every code as wide as the final codebook requires
  variable,      ///< each code as wide as the codebook at its emission
};

inline std::string_view to_string(WidthPolicy p) noexcept {
  switch (p) {
  case WidthPolicy::fixed12: return "fixed12";
  case WidthPolicy::fixed_minimal: return "fixed_minimal";
  case WidthPolicy::variable: return "variable";
  }
  return "?";
}

inline std::optional<WidthPolicy> parse_width_policy(std::string_view s) {
  if (s == "fixed12") return WidthPolicy::fixed12;
  if (s == "fixed_minimal") return WidthPolicy::fixed_minimal;
  if (s == "variable") return WidthPolicy::variable;
  return std::nullopt;
}

inline constexpr std::size_t kFixed12Capacity = 4096;

inline std::size_t codebook_capacity(WidthPolicy p) noexcept {
  return p == WidthPolicy::fixed12 ? kFixed12Capacity
                                   : std::numeric_limits<std::size_t>::max();
}

/**
 * LZW dictionary stored as a trie. Codes are assigned in insertion order;
 * codes 0..|alphabet|-1 are the single symbols in alphabet order and every
 * later phrase extends an earlier one by one symbol.
 */
class Codebook {
public:
  explicit Codebook(const Alphabet& alphabet,
                    std::size_t capacity = std::numeric_limits<std::size_t>::max())
      : alphabet_(alphabet), capacity_(capacity) {
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      add_node(kNone, alphabet_[i]);
    }
  }

  [[nodiscard]] std::size_t size() const noexcept { return parent_.size(); }
  [[nodiscard]] bool full() const noexcept { return size() >= capacity_; }
  [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }

  /// Code of `prefix` followed by `symbol`, if present.
  [[nodiscard]] std::optional<Code> child(Code prefix, char symbol) const {
    const Code c = children_[static_cast<std::size_t>(prefix) * alphabet_.size() +
                             alphabet_.index_of(symbol)];
    return c == kNone ? std::nullopt : std::optional<Code>(c);
  }

  [[nodiscard]] Code single(char symbol) const noexcept {
    return static_cast<Code>(alphabet_.index_of(symbol));
  }

  /// Adds phrase(prefix) + symbol unless the book is full.
  std::optional<Code> insert(Code prefix, char symbol) {
    if (full()) {
      return std::nullopt;
    }
    const Code code = add_node(prefix, symbol);
    children_[static_cast<std::size_t>(prefix) * alphabet_.size() +
              alphabet_.index_of(symbol)] = code;
    return code;
  }

  [[nodiscard]] std::string phrase(Code code) const {
    std::string out;
    for (Code c = code; c != kNone; c = parent_[c]) {
      out.push_back(last_[c]);
    }
    return {out.rbegin(), out.rend()};
  }

  [[nodiscard]] char first_symbol(Code code) const {
    Code c = code;
    while (parent_[c] != kNone) {
      c = parent_[c];
    }
    return last_[c];
  }

  /// All phrases in code order.
  [[nodiscard]] std::vector<std::string> entries() const {
    std::vector<std::string> out;
    out.reserve(size());
    for (Code c = 0; c < size(); ++c) {
      out.push_back(phrase(c));
    }
    return out;
  }

private:
  static constexpr Code kNone = std::numeric_limits<Code>::max();

  Code add_node(Code parent, char symbol) {
    const auto code = static_cast<Code>(parent_.size());
    parent_.push_back(parent);
    last_.push_back(symbol);
    children_.resize(children_.size() + alphabet_.size(), kNone);
    return code;
  }

  Alphabet alphabet_;
  std::size_t capacity_;
  std::vector<Code> parent_;
  std::vector<char> last_;
  std::vector<Code> children_;
};

struct CodeStream {
  std::vector<Code> codes;
  Alphabet alphabet;
  WidthPolicy width_policy = WidthPolicy::fixed_minimal;
};

struct SizeReport {
  std::size_t code_count = 0;
  std::size_t bits = 0;
};

/// Greedy longest-match encoding. The pending phrase is flushed at the end.
inline CodeStream lzw_encode(const Sequence& s,
                             WidthPolicy policy = WidthPolicy::fixed_minimal,
                             Codebook* book_out = nullptr) {
  if (s.empty()) {
    throw EmptySequence();
  }
  Codebook book(s.alphabet(), codebook_capacity(policy));
  CodeStream out{{}, s.alphabet(), policy};
  Code w = book.single(s[0]);
  for (std::size_t i = 1; i < s.size(); ++i) {
    const char c = s[i];
    if (const auto next = book.child(w, c)) {
      w = *next;
      continue;
    }
    out.codes.push_back(w);
    book.insert(w, c);
    w = book.single(c);
  }
  out.codes.push_back(w);
  if (book_out != nullptr) {
    *book_out = std::move(book);
  }
  return out;
}

/// Rebuilds the codebook while reading. A code equal to the next free code
/// decodes to the previous output plus its own first symbol.
inline Sequence lzw_decode(const CodeStream& cs) {
  if (cs.codes.empty()) {
    throw InvalidCode("empty code stream");
  }
  Codebook book(cs.alphabet, codebook_capacity(cs.width_policy));
  Code prev = cs.codes.front();
  if (prev >= book.size()) {
    throw InvalidCode("first code " + std::to_string(prev) +
                      " is outside the initial codebook");
  }
  std::string out = book.phrase(prev);
  for (std::size_t k = 1; k < cs.codes.size(); ++k) {
    const Code code = cs.codes[k];
    std::string entry;
    if (code < book.size()) {
      entry = book.phrase(code);
    } else if (code == book.size() && !book.full()) {
      entry = book.phrase(prev);
      entry.push_back(book.first_symbol(prev));
    } else {
      throw InvalidCode("code " + std::to_string(code) + " at index " +
                        std::to_string(k) + " exceeds next code " +
                        std::to_string(book.size()));
    }
    book.insert(prev, entry.front());
    out += entry;
    prev = code;
  }
  return Sequence{std::move(out), cs.alphabet};
}

/// Smallest width holding values below `size`, never less than 1.
inline unsigned ceil_log2(std::size_t size) noexcept {
  unsigned bits = 0;
  while (bits < 64 && (std::size_t{1} << bits) < size) {
    ++bits;
  }
  return bits == 0 ? 1 : bits;
}

/**
 * Bit width of each emitted code. Each emission but the last is followed by
 * exactly one insertion, so the book holds |alphabet| + i entries when code i
 * is written (capped under fixed12).
 */
inline std::vector<unsigned> code_widths(const CodeStream& cs,
                                         WidthPolicy policy) {
  const std::size_t cap = codebook_capacity(cs.width_policy);
  const std::size_t base = cs.alphabet.size();
  const std::size_t n = cs.codes.size();
  auto book_size_at = [&](std::size_t i) { return std::min(base + i, cap); };

  std::vector<unsigned> widths(n, 0);
  switch (policy) {
  case WidthPolicy::fixed12:
    std::fill(widths.begin(), widths.end(), 12U);
    break;
  case WidthPolicy::fixed_minimal:
    if (n > 0) {
      std::fill(widths.begin(), widths.end(), ceil_log2(book_size_at(n - 1)));
    }
    break;
  case WidthPolicy::variable:
    for (std::size_t i = 0; i < n; ++i) {
      widths[i] = ceil_log2(book_size_at(i));
    }
    break;
  }
  return widths;
}

inline SizeReport compressed_size(const CodeStream& cs, WidthPolicy policy) {
  SizeReport r{cs.codes.size(), 0};
  for (unsigned w : code_widths(cs, policy)) {
    r.bits += w;
  }
  return r;
}

inline SizeReport compressed_size(const CodeStream& cs) {
  return compressed_size(cs, cs.width_policy);
}

/// Codes written most-significant bit first at their policy widths.
inline std::string to_bitstring(const CodeStream& cs, WidthPolicy policy) {
  const auto widths = code_widths(cs, policy);
  std::string out;
  for (std::size_t i = 0; i < cs.codes.size(); ++i) {
    for (unsigned b = widths[i]; b-- > 0;) {
      out.push_back(((cs.codes[i] >> b) & 1U) != 0 ? '1' : '0');
    }
  }
  return out;
}

} // namespace seqdist
