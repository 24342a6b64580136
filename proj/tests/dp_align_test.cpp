#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "seqdist/dp_align.hpp"
#include "test_util.hpp"

using namespace seqdist;

namespace {

std::string strip_gaps(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != kGap) out.push_back(c);
  return out;
}

void expect_well_formed(const AlignmentResult& r, std::string_view a,
                        std::string_view b, const SubstitutionMatrix& m,
                        GapPenalty g) {
  ASSERT_EQ(r.aligned_a.size(), r.aligned_b.size());
  for (std::size_t k = 0; k < r.aligned_a.size(); ++k) {
    EXPECT_FALSE(r.aligned_a[k] == kGap && r.aligned_b[k] == kGap);
  }
  EXPECT_EQ(strip_gaps(r.aligned_a), a.substr(r.a_begin, r.a_end - r.a_begin));
  EXPECT_EQ(strip_gaps(r.aligned_b), b.substr(r.b_begin, r.b_end - r.b_begin));
  EXPECT_EQ(score_alignment(r.aligned_a, r.aligned_b, m, g), r.score);
}

} // namespace

TEST(ScoreAlignment, ColumnExample) {
  // Columns (A,C) (A,G) (G,A), three gap columns, then (G,G).
  const auto m = testing_util::dna_similarity();
  EXPECT_EQ(score_alignment("AAG---G", "CGATTAG", m, GapPenalty{-5}), -13);
}

TEST(ScoreAlignment, SingleColumns) {
  const auto m = testing_util::dna_similarity();
  EXPECT_EQ(score_alignment("A", "A", m, GapPenalty{-5}), 5);
  EXPECT_EQ(score_alignment("-", "A", m, GapPenalty{-5}), -5);
}

TEST(ScoreAlignment, Errors) {
  const auto m = testing_util::dna_similarity();
  EXPECT_THROW((void)score_alignment("A-", "A-", m, GapPenalty{-5}), DoubleGapColumn);
  EXPECT_THROW((void)score_alignment("AA", "A", m, GapPenalty{-5}), LengthMismatch);
}

TEST(NeedlemanWunsch, EndPend) {
  const auto m = testing_util::end_pend_matrix();
  const auto r = needleman_wunsch("END", "PEND", m, GapPenalty{-10});
  EXPECT_EQ(r.score, 7);
  EXPECT_EQ(r.aligned_a, "-END");
  EXPECT_EQ(r.aligned_b, "PEND");

  const auto& c = r.score_matrix;
  ASSERT_EQ(c.rows(), 4U);
  ASSERT_EQ(c.cols(), 5U);
  const int boundary_row[] = {0, -10, -20, -30, -40};
  for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(c(0, j), boundary_row[j]);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(c(i, 0), -10 * static_cast<int>(i));

  EXPECT_EQ(c(1, 1), -1);
  EXPECT_EQ(c(1, 2), -5);
  EXPECT_EQ(c(2, 2), -1);
  EXPECT_EQ(c(2, 3), 1);
  EXPECT_EQ(c(3, 3), 0);
  EXPECT_EQ(c(3, 4), 7);
  EXPECT_EQ(c(2, 1), -11);
  EXPECT_EQ(c(3, 1), -21);
  EXPECT_EQ(c(3, 2), -9);
  // The recursion gives these three; a hand-filled table can disagree.
  EXPECT_EQ(c(1, 3), -15);
  EXPECT_EQ(c(1, 4), -25);
  EXPECT_EQ(c(2, 4), -9);
}

TEST(NeedlemanWunsch, EndPendTraceback) {
  const auto m = testing_util::end_pend_matrix();
  const auto r = needleman_wunsch("END", "PEND", m, GapPenalty{-10});
  const auto& t = r.traceback;
  EXPECT_EQ(t(0, 0), Move::Done);
  for (std::size_t j = 1; j < 5; ++j) EXPECT_EQ(t(0, j), Move::Left);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_EQ(t(i, 0), Move::Up);
  // Diag and Up tie at -21 for (D, P); Diag wins.
  EXPECT_EQ(t(3, 1), Move::Diag);
  EXPECT_EQ(t(3, 4), Move::Diag);
  EXPECT_EQ(t(2, 3), Move::Diag);
  EXPECT_EQ(t(1, 2), Move::Diag);
  EXPECT_EQ(t(2, 1), Move::Up);
}

TEST(NeedlemanWunsch, EmptyInputs) {
  const auto m = testing_util::dna_similarity();
  const auto both = needleman_wunsch("", "", m, GapPenalty{-5});
  EXPECT_EQ(both.score, 0);
  EXPECT_TRUE(both.aligned_a.empty());

  const auto one = needleman_wunsch("ACG", "", m, GapPenalty{-5});
  EXPECT_EQ(one.score, -15);
  EXPECT_EQ(one.aligned_a, "ACG");
  EXPECT_EQ(one.aligned_b, "---");
}

TEST(NeedlemanWunsch, IdenticalSequencesAlignWithoutGaps) {
  const auto m = testing_util::dna_similarity();
  const auto r = needleman_wunsch("GATTACA", "GATTACA", m, GapPenalty{-5});
  EXPECT_EQ(r.aligned_a, "GATTACA");
  EXPECT_EQ(r.aligned_b, "GATTACA");
  EXPECT_EQ(r.score, 7 + 5 + 8 + 8 + 5 + 9 + 5);
}

TEST(NeedlemanWunsch, SymbolOutsideMatrix) {
  const auto m = testing_util::dna_similarity();
  EXPECT_THROW((void)needleman_wunsch("ACX", "AC", m, GapPenalty{-5}), AlphabetMismatch);
}

TEST(NeedlemanWunsch, MatchesExhaustiveEnumeration) {
  const auto m = parse_substitution_matrix("A C\nA 2 -1\nC -1 3\n");
  const oracle::PairScore s = [&](char x, char y) { return m.score(x, y); };
  const auto strings = oracle::all_strings("AC", 4);
  for (int gap : {-1, -2, -4}) {
    for (const auto& a : strings) {
      for (const auto& b : strings) {
        const auto r = needleman_wunsch(a, b, m, GapPenalty{gap});
        ASSERT_EQ(r.score, oracle::best_global_score(a, b, s, gap)) << a << "/" << b;
        expect_well_formed(r, a, b, m, GapPenalty{gap});
        EXPECT_EQ(r.a_begin, 0U);
        EXPECT_EQ(r.a_end, a.size());
      }
    }
  }
}

TEST(NeedlemanWunsch, LcsWithZeroGapAndUnitMatch) {
  std::mt19937_64 rng(5);
  const auto m = SubstitutionMatrix::match_mismatch(Alphabet::dna(), 1, 0);
  for (int trial = 0; trial < 300; ++trial) {
    std::string a(rng() % 13, 'A');
    std::string b(rng() % 13, 'A');
    for (auto& c : a) c = "ACGT"[rng() % 4];
    for (auto& c : b) c = "ACGT"[rng() % 4];
    const auto r = needleman_wunsch(a, b, m, GapPenalty{0});
    EXPECT_EQ(static_cast<std::size_t>(r.score), oracle::lcs_length(a, b));
  }
}

TEST(NeedlemanWunsch, SwapInvarianceAndTracebackShape) {
  std::mt19937_64 rng(6);
  const auto m = testing_util::dna_similarity();
  for (int trial = 0; trial < 300; ++trial) {
    std::string a(rng() % 10, 'A');
    std::string b(rng() % 10, 'A');
    for (auto& c : a) c = "ACGT"[rng() % 4];
    for (auto& c : b) c = "ACGT"[rng() % 4];
    const auto ab = needleman_wunsch(a, b, m, GapPenalty{-4});
    const auto ba = needleman_wunsch(b, a, m, GapPenalty{-4});
    EXPECT_EQ(ab.score, ba.score);
    EXPECT_LE(ab.aligned_a.size(), a.size() + b.size());
    expect_well_formed(ab, a, b, m, GapPenalty{-4});
  }
}

TEST(SmithWaterman, LocalExample) {
  const auto m = SubstitutionMatrix::match_mismatch(Alphabet::dna(), 5, -4);
  const auto r = smith_waterman("AAGCT", "GCT", m, GapPenalty{-5});
  EXPECT_EQ(r.score, 15);
  EXPECT_EQ(r.aligned_a, "GCT");
  EXPECT_EQ(r.aligned_b, "GCT");
  EXPECT_EQ(r.a_begin, 2U);
  EXPECT_EQ(r.a_end, 5U);
}

TEST(SmithWaterman, LocalExampleAgreesWithOracle) {
  const auto m = SubstitutionMatrix::match_mismatch(Alphabet::dna(), 5, -4);
  const oracle::PairScore s = [&](char x, char y) { return m.score(x, y); };
  EXPECT_EQ(oracle::best_local_score("AAGCT", "GCT", s, -5), 15);
}

TEST(SmithWaterman, AllNegativeGivesEmpty) {
  const auto m = SubstitutionMatrix::match_mismatch(Alphabet::dna(), -1, -3);
  const auto r = smith_waterman("AAAA", "CCCC", m, GapPenalty{-2});
  EXPECT_EQ(r.score, 0);
  EXPECT_TRUE(r.aligned_a.empty());
  EXPECT_TRUE(r.aligned_b.empty());
}

TEST(SmithWaterman, MatchesExhaustiveEnumeration) {
  const auto m = parse_substitution_matrix("A C\nA 2 -1\nC -1 3\n");
  const oracle::PairScore s = [&](char x, char y) { return m.score(x, y); };
  const auto strings = oracle::all_strings("AC", 4);
  for (int gap : {-1, -3}) {
    for (const auto& a : strings) {
      for (const auto& b : strings) {
        const auto r = smith_waterman(a, b, m, GapPenalty{gap});
        ASSERT_EQ(r.score, oracle::best_local_score(a, b, s, gap)) << a << "/" << b;
        ASSERT_GE(r.score, 0);
        expect_well_formed(r, a, b, m, GapPenalty{gap});
        for (std::size_t i = 0; i < r.score_matrix.rows(); ++i)
          for (std::size_t j = 0; j < r.score_matrix.cols(); ++j)
            ASSERT_GE(r.score_matrix(i, j), 0);
      }
    }
  }
}

TEST(SmithWaterman, IdenticalNonNegativeAtLeastGlobal) {
  const auto m = testing_util::dna_similarity();
  for (const std::string s : {"A", "GATTACA", "CCGT"}) {
    const auto local = smith_waterman(s, s, m, GapPenalty{-5});
    const auto global = needleman_wunsch(s, s, m, GapPenalty{-5});
    EXPECT_GE(local.score, std::max(0, global.score));
  }
}

TEST(SmithWaterman, TieBreakPicksFirstCell) {
  // Two equally good local hits; the one ending earliest in row-major order wins.
  const auto m = SubstitutionMatrix::match_mismatch(Alphabet::dna(), 2, -3);
  const auto r = smith_waterman("ACTTAC", "AC", m, GapPenalty{-5});
  EXPECT_EQ(r.score, 4);
  EXPECT_EQ(r.a_begin, 0U);
  EXPECT_EQ(r.a_end, 2U);
}
