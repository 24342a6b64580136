#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "seqdist/edit_metrics.hpp"

using namespace seqdist;

TEST(Hamming, WorkedExamples) {
  EXPECT_EQ(hamming("1100111001", "0100010101"), 4U);
  EXPECT_EQ(hamming("AGCTAAC", "AACTCCA"), 4U);
  EXPECT_EQ(hamming("GATTACA", "GATTACA"), 0U);
}

TEST(Hamming, LengthMismatch) {
  EXPECT_THROW((void)hamming("AC", "ACG"), LengthMismatch);
}

TEST(Hamming, SequenceAlphabetsMustMatch) {
  EXPECT_THROW((void)hamming(make_sequence("01", Alphabet::binary()),
                             make_sequence("AC", Alphabet::dna())),
               AlphabetMismatch);
}

TEST(Levenshtein, WorkedExamples) {
  EXPECT_EQ(levenshtein("barking", "dark"), 4U);
  EXPECT_EQ(levenshtein("CA", "ABC"), 3U);
  EXPECT_EQ(levenshtein("", "abc"), 3U);
}

TEST(Osa, WorkedExamples) {
  EXPECT_EQ(osa("CA", "ABC"), 3U);
  EXPECT_EQ(osa("AB", "BA"), 1U);
  EXPECT_EQ(osa("GATTACA", "GATTACA"), 0U);
}

TEST(DamerauLevenshtein, WorkedExamples) {
  EXPECT_EQ(damerau_levenshtein("CA", "ABC"), 2U);
  EXPECT_EQ(damerau_levenshtein("AB", "BA"), 1U);
  EXPECT_EQ(damerau_levenshtein("", "a"), 1U);
  EXPECT_EQ(damerau_levenshtein("", ""), 0U);
}

TEST(Osa, TriangleViolationWitness) {
  EXPECT_EQ(osa("CA", "AC"), 1U);
  EXPECT_EQ(osa("AC", "ABC"), 1U);
  EXPECT_EQ(osa("CA", "ABC"), 3U);
  EXPECT_GT(osa("CA", "ABC"), osa("CA", "AC") + osa("AC", "ABC"));
}

TEST(EditDistance, ReportCarriesMethod) {
  const auto a = make_sequence("CA", Alphabet::text());
  const auto b = make_sequence("ABC", Alphabet::text());
  const auto r = edit_distance(a, b, EditMethod::damerau_levenshtein);
  EXPECT_EQ(r.distance, 2U);
  EXPECT_EQ(r.method, EditMethod::damerau_levenshtein);
  EXPECT_EQ(to_string(r.method), "damerau_levenshtein");
}

// Every pair of strings up to length 4 over a 2-symbol alphabet.
TEST(EditMetricsOracle, ExhaustiveSmallPairs) {
  const auto strings = oracle::all_strings("ab", 4);
  for (const auto& a : strings) {
    for (const auto& b : strings) {
      ASSERT_EQ(levenshtein(a, b), oracle::bfs_edit_distance(a, b, false))
          << a << " / " << b;
      ASSERT_EQ(damerau_levenshtein(a, b), oracle::bfs_edit_distance(a, b, true))
          << a << " / " << b;
      ASSERT_EQ(osa(a, b), oracle::osa_path_search(a, b)) << a << " / " << b;
    }
  }
}

TEST(EditMetricsOracle, ThreeSymbolExamples) {
  EXPECT_EQ(oracle::bfs_edit_distance("CA", "ABC", false), 3U);
  EXPECT_EQ(oracle::bfs_edit_distance("CA", "ABC", true), 2U);
  EXPECT_EQ(oracle::osa_path_search("CA", "ABC"), 3U);
}

namespace {

std::string random_string(std::mt19937_64& rng, std::size_t max_len,
                          std::string_view symbols) {
  std::string s(rng() % (max_len + 1), symbols[0]);
  for (auto& c : s) c = symbols[rng() % symbols.size()];
  return s;
}

} // namespace

TEST(EditMetricsProperty, IdentitySymmetryOrdering) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = random_string(rng, 12, "ACGT");
    const auto b = random_string(rng, 12, "ACGT");
    EXPECT_EQ(levenshtein(a, a), 0U);
    EXPECT_EQ(osa(a, a), 0U);
    EXPECT_EQ(damerau_levenshtein(a, a), 0U);
    EXPECT_EQ(levenshtein(a, b), levenshtein(b, a));
    EXPECT_EQ(osa(a, b), osa(b, a));
    EXPECT_EQ(damerau_levenshtein(a, b), damerau_levenshtein(b, a));
    EXPECT_LE(damerau_levenshtein(a, b), osa(a, b));
    EXPECT_LE(osa(a, b), levenshtein(a, b));
    EXPECT_LE(levenshtein(a, b), std::max(a.size(), b.size()));
    if (a.size() == b.size()) {
      EXPECT_GE(hamming(a, b), levenshtein(a, b));
      EXPECT_EQ(hamming(a, b), hamming(b, a));
    }
  }
}

TEST(EditMetricsProperty, LevenshteinTriangle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto a = random_string(rng, 8, "01");
    const auto b = random_string(rng, 8, "01");
    const auto c = random_string(rng, 8, "01");
    ASSERT_LE(levenshtein(a, c), levenshtein(a, b) + levenshtein(b, c));
    ASSERT_LE(damerau_levenshtein(a, c),
              damerau_levenshtein(a, b) + damerau_levenshtein(b, c));
  }
}
