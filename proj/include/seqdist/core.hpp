#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqdist/error.hpp"

namespace seqdist {

/// Gap symbol used in rendered alignments.
inline constexpr char kGap = '-';

/** Ordered set of distinct single-character symbols. */
class Alphabet {
public:
  explicit Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.empty()) {
      throw InvalidAlphabet("alphabet must contain at least one symbol");
    }
    index_.fill(-1);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      auto& slot = index_[static_cast<unsigned char>(symbols_[i])];
      if (slot != -1) {
        throw InvalidAlphabet("duplicate symbol '" +
                              std::string(1, symbols_[i]) + "' in alphabet");
      }
      slot = static_cast<std::int16_t>(i);
    }
  }

  static Alphabet dna() { return Alphabet{"ACGT"}; }
  static Alphabet binary() { return Alphabet{"01"}; }

  /// Printable ASCII, space through tilde.
  static Alphabet text() {
    std::string symbols;
    for (char c = ' '; c <= '~'; ++c) {
      symbols.push_back(c);
    }
    return Alphabet{symbols};
  }

  [[nodiscard]] bool contains(char c) const noexcept {
    return index_[static_cast<unsigned char>(c)] != -1;
  }

  /// Position of `c` in alphabet order. Precondition: contains(c).
  [[nodiscard]] std::size_t index_of(char c) const noexcept {
    return static_cast<std::size_t>(index_[static_cast<unsigned char>(c)]);
  }

  [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
  [[nodiscard]] std::string_view symbols() const noexcept { return symbols_; }
  [[nodiscard]] char operator[](std::size_t i) const noexcept {
    return symbols_[i];
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.symbols_ == b.symbols_;
  }

private:
  std::string symbols_;
  std::array<std::int16_t, 256> index_{};
};

/** Symbols validated against an alphabet. Immutable after construction. */
class Sequence {
public:
  Sequence(std::string symbols, Alphabet alphabet)
      : symbols_(std::move(symbols)), alphabet_(std::move(alphabet)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (!alphabet_.contains(symbols_[i])) {
        throw SymbolNotInAlphabet(i, symbols_[i]);
      }
    }
  }

  [[nodiscard]] const std::string& str() const noexcept { return symbols_; }
  [[nodiscard]] std::string_view view() const noexcept { return symbols_; }
  operator std::string_view() const noexcept { return symbols_; }

  [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
  [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
  [[nodiscard]] char operator[](std::size_t i) const noexcept {
    return symbols_[i];
  }
  [[nodiscard]] auto begin() const noexcept { return symbols_.begin(); }
  [[nodiscard]] auto end() const noexcept { return symbols_.end(); }

  friend bool operator==(const Sequence& a, const Sequence& b) noexcept {
    return a.symbols_ == b.symbols_ && a.alphabet_ == b.alphabet_;
  }

private:
  std::string symbols_;
  Alphabet alphabet_;
};

inline Sequence make_sequence(std::string_view text, const Alphabet& alphabet) {
  return Sequence{std::string(text), alphabet};
}

inline std::string fold_upper(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::toupper(c));
  });
  return out;
}

/// Symbol concatenation; both operands must share an alphabet.
inline Sequence concat(const Sequence& a, const Sequence& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw AlphabetMismatch();
  }
  return Sequence{a.str() + b.str(), a.alphabet()};
}

inline bool hamming_compatible(const Sequence& a, const Sequence& b) noexcept {
  return a.alphabet() == b.alphabet() && a.size() == b.size();
}

/// Additive score applied per gap symbol. Usually negative.
struct GapPenalty {
  int score = 0;

  /// A positive gap score rewards gaps; callers should warn about it.
  [[nodiscard]] constexpr bool rewards_gaps() const noexcept {
    return score > 0;
  }
};

/** Integer score for every ordered pair of alphabet symbols. */
class SubstitutionMatrix {
public:
  SubstitutionMatrix(Alphabet alphabet, std::vector<int> scores)
      : alphabet_(std::move(alphabet)), scores_(std::move(scores)) {
    if (scores_.size() != alphabet_.size() * alphabet_.size()) {
      throw MalformedMatrix("score table must have " +
                            std::to_string(alphabet_.size() * alphabet_.size()) +
                            " cells");
    }
  }

  static SubstitutionMatrix match_mismatch(const Alphabet& alphabet, int match,
                                           int mismatch) {
    const std::size_t n = alphabet.size();
    std::vector<int> scores(n * n, mismatch);
    for (std::size_t i = 0; i < n; ++i) {
      scores[i * n + i] = match;
    }
    return SubstitutionMatrix{alphabet, std::move(scores)};
  }

  [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }

  /// Score of the pair (x, y). Both symbols must belong to the alphabet.
  [[nodiscard]] int score(char x, char y) const {
    if (!alphabet_.contains(x) || !alphabet_.contains(y)) {
      throw AlphabetMismatch("pair (" + std::string(1, x) + "," +
                             std::string(1, y) +
                             ") is not covered by the substitution matrix");
    }
    return scores_[alphabet_.index_of(x) * alphabet_.size() +
                   alphabet_.index_of(y)];
  }

  [[nodiscard]] bool is_symmetric() const noexcept {
    const std::size_t n = alphabet_.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (scores_[i * n + j] != scores_[j * n + i]) {
          return false;
        }
      }
    }
    return true;
  }

  /// Throws AlphabetMismatch naming the first symbol of `s` the matrix lacks.
  void require_covers(std::string_view s) const {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!alphabet_.contains(s[i])) {
        throw AlphabetMismatch("symbol '" + std::string(1, s[i]) +
                               "' at position " + std::to_string(i) +
                               " is not covered by the substitution matrix");
      }
    }
  }

private:
  Alphabet alphabet_;
  std::vector<int> scores_;
};

namespace detail {

inline std::vector<std::string> split_whitespace(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string token;
  while (in >> token) {
    tokens.push_back(token);
  }
  return tokens;
}

inline bool is_blank_or_comment(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

} // namespace detail

/**
 * Parses a whitespace-separated score table.
 *
 * The first non-comment line lists the column symbols. Each following line
 * holds a row symbol and one integer per column. Lines starting with `#` are
 * comments. Every row symbol must appear exactly once and match the header.
 */
inline SubstitutionMatrix parse_substitution_matrix(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (!detail::is_blank_or_comment(line)) {
        lines.push_back(line);
      }
    }
  }
  if (lines.empty()) {
    throw MalformedMatrix("matrix has no header line");
  }

  std::string header;
  for (const auto& token : detail::split_whitespace(lines.front())) {
    if (token.size() != 1) {
      throw MalformedMatrix("header symbol '" + token +
                            "' is not a single character");
    }
    header.push_back(token.front());
  }
  Alphabet alphabet = [&] {
    try {
      return Alphabet{header};
    } catch (const InvalidAlphabet& e) {
      throw MalformedMatrix(std::string("bad header: ") + e.what());
    }
  }();

  const std::size_t n = alphabet.size();
  std::vector<int> scores(n * n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto tokens = detail::split_whitespace(lines[li]);
    const std::string& row = tokens.front();
    if (row.size() != 1 || !alphabet.contains(row.front())) {
      throw MalformedMatrix("row label '" + row + "' is not a header symbol");
    }
    const std::size_t r = alphabet.index_of(row.front());
    if (seen[r]) {
      throw MalformedMatrix("duplicate row '" + row + "'");
    }
    seen[r] = true;
    if (tokens.size() != n + 1) {
      throw MalformedMatrix("row '" + row + "' has " +
                            std::to_string(tokens.size() - 1) +
                            " cells, expected " + std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      const std::string& cell = tokens[c + 1];
      int value = 0;
      const char* first = cell.data();
      const char* last = cell.data() + cell.size();
      if (first != last && *first == '+') {
        ++first;
      }
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr != last) {
        throw MalformedMatrix("cell '" + cell + "' in row '" + row +
                              "' is not an integer");
      }
      scores[r * n + c] = value;
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (!seen[r]) {
      throw MalformedMatrix("missing row '" + std::string(1, alphabet[r]) +
                            "'");
    }
  }
  return SubstitutionMatrix{std::move(alphabet), std::move(scores)};
}

} // namespace seqdist
