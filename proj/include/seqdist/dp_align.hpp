#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "seqdist/core.hpp"
#include "seqdist/grid.hpp"

namespace seqdist {

/// Direction recorded in a traceback cell.
enum class Move : std::uint8_t { Diag, Up, Left, Done };

inline std::string_view to_string(Move m) noexcept {
  switch (m) {
  case Move::Diag: return "Diag";
  case Move::Up: return "Up";
  case Move::Left: return "Left";
  case Move::Done: return "Done";
  }
  return "?";
}

using ScoreMatrix = Grid<int>;
using TracebackMatrix = Grid<Move>;

/**
 * A pairwise alignment plus the DP tables that produced it.
 *
 * Rows of the tables are indexed by the first sequence, columns by the
 * second; row and column 0 are the boundary. The aligned strings cover
 * a[a_begin, a_end) and b[b_begin, b_end); for global alignment that is the
 * whole of both inputs.
 */
struct AlignmentResult {
  std::string aligned_a;
  std::string aligned_b;
  int score = 0;
  ScoreMatrix score_matrix;
  TracebackMatrix traceback;
  std::size_t a_begin = 0;
  std::size_t a_end = 0;
  std::size_t b_begin = 0;
  std::size_t b_end = 0;
};

/// Column-wise score of a gapped pair: s(x, y) per symbol column, g per gap.
inline int score_alignment(std::string_view aligned_a,
                           std::string_view aligned_b,
                           const SubstitutionMatrix& m, GapPenalty g) {
  if (aligned_a.size() != aligned_b.size()) {
    throw LengthMismatch(aligned_a.size(), aligned_b.size());
  }
  int total = 0;
  for (std::size_t k = 0; k < aligned_a.size(); ++k) {
    const bool gap_a = aligned_a[k] == kGap;
    const bool gap_b = aligned_b[k] == kGap;
    if (gap_a && gap_b) {
      throw DoubleGapColumn(k);
    }
    total += (gap_a || gap_b) ? g.score : m.score(aligned_a[k], aligned_b[k]);
  }
  return total;
}

namespace detail {

/// Walks the traceback from (i, j) until a Done cell, building the gapped
/// pair back to front.
inline void trace_back(AlignmentResult& r, std::string_view a,
                       std::string_view b, std::size_t i, std::size_t j) {
  r.a_end = i;
  r.b_end = j;
  std::string ra;
  std::string rb;
  while (r.traceback(i, j) != Move::Done) {
    switch (r.traceback(i, j)) {
    case Move::Diag:
      ra.push_back(a[--i]);
      rb.push_back(b[--j]);
      break;
    case Move::Up:
      ra.push_back(a[--i]);
      rb.push_back(kGap);
      break;
    case Move::Left:
      ra.push_back(kGap);
      rb.push_back(b[--j]);
      break;
    case Move::Done: break;
    }
  }
  r.a_begin = i;
  r.b_begin = j;
  r.aligned_a.assign(ra.rbegin(), ra.rend());
  r.aligned_b.assign(rb.rbegin(), rb.rend());
}

} // namespace detail

/**
 * Global alignment with a linear gap score.
 *
 * C(i,0) = i*g and C(0,j) = j*g; every interior cell takes the best of the
 * diagonal, up and left predecessors. Ties prefer Diag, then Up, then Left.
 * Traceback starts at the bottom-right cell and ends at (0,0). An Up move
 * consumes a symbol of `a` against a gap; Left consumes one of `b`.
 */
inline AlignmentResult needleman_wunsch(std::string_view a, std::string_view b,
                                        const SubstitutionMatrix& m,
                                        GapPenalty g) {
  m.require_covers(a);
  m.require_covers(b);
  const std::size_t n = a.size();
  const std::size_t k = b.size();

  AlignmentResult r;
  r.score_matrix = ScoreMatrix(n + 1, k + 1, 0);
  r.traceback = TracebackMatrix(n + 1, k + 1, Move::Done);
  auto& c = r.score_matrix;
  auto& t = r.traceback;

  for (std::size_t i = 1; i <= n; ++i) {
    c(i, 0) = static_cast<int>(i) * g.score;
    t(i, 0) = Move::Up;
  }
  for (std::size_t j = 1; j <= k; ++j) {
    c(0, j) = static_cast<int>(j) * g.score;
    t(0, j) = Move::Left;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= k; ++j) {
      const int diag = c(i - 1, j - 1) + m.score(a[i - 1], b[j - 1]);
      const int up = c(i - 1, j) + g.score;
      const int left = c(i, j - 1) + g.score;
      if (diag >= up && diag >= left) {
        c(i, j) = diag;
        t(i, j) = Move::Diag;
      } else if (up >= left) {
        c(i, j) = up;
        t(i, j) = Move::Up;
      } else {
        c(i, j) = left;
        t(i, j) = Move::Left;
      }
    }
  }
  r.score = c(n, k);
  detail::trace_back(r, a, b, n, k);
  return r;
}

/**
 * Local alignment. Cells are clamped at zero and a zero cell ends the
 * traceback. The start cell is the highest score, first in row-major order
 * on ties. `g` is the same additive (normally negative) gap score used by
 * needleman_wunsch, so a gap cost of 5 is passed as GapPenalty{-5}.
 */
inline AlignmentResult smith_waterman(std::string_view a, std::string_view b,
                                      const SubstitutionMatrix& m,
                                      GapPenalty g) {
  m.require_covers(a);
  m.require_covers(b);
  const std::size_t n = a.size();
  const std::size_t k = b.size();

  AlignmentResult r;
  r.score_matrix = ScoreMatrix(n + 1, k + 1, 0);
  r.traceback = TracebackMatrix(n + 1, k + 1, Move::Done);
  auto& c = r.score_matrix;
  auto& t = r.traceback;

  std::size_t best_i = 0;
  std::size_t best_j = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= k; ++j) {
      const int diag = c(i - 1, j - 1) + m.score(a[i - 1], b[j - 1]);
      const int up = c(i - 1, j) + g.score;
      const int left = c(i, j - 1) + g.score;
      const int best = std::max({0, diag, up, left});
      c(i, j) = best;
      if (best == 0) {
        t(i, j) = Move::Done;
      } else if (best == diag) {
        t(i, j) = Move::Diag;
      } else if (best == up) {
        t(i, j) = Move::Up;
      } else {
        t(i, j) = Move::Left;
      }
      if (best > c(best_i, best_j)) {
        best_i = i;
        best_j = j;
      }
    }
  }
  r.score = c(best_i, best_j);
  detail::trace_back(r, a, b, best_i, best_j);
  return r;
}

} // namespace seqdist
