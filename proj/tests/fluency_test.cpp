#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "entmt/error.hpp"
#include "entmt/fluency.hpp"
#include "test_util.hpp"

namespace entmt {
namespace {

const std::vector<MatcherStage> kExact = {MatcherStage::exact()};

ChunkProfile paper_profile(const char* hyp) {
  return extract_chunks(align(tokenize(hyp), tokenize(testing::kRef), kExact));
}

// Alignment whose chunks have the given lengths, separated by one unmatched
// position on both sides.
Alignment alignment_with_chunks(const std::vector<std::size_t>& lengths) {
  Alignment a;
  std::size_t pos = 0;
  for (std::size_t l : lengths) {
    for (std::size_t k = 0; k < l; ++k, ++pos) a.pairs.push_back({pos, pos, StageKind::exact});
    ++pos;
  }
  a.hyp_length = a.ref_length = pos;
  return a;
}

TEST(ExtractChunks, PaperWorkedExample) {
  auto p1 = paper_profile(testing::kHyp1);
  auto p2 = paper_profile(testing::kHyp2);
  auto p3 = paper_profile(testing::kHyp3);
  EXPECT_EQ(p1.lengths(), (std::vector<std::size_t>{3, 1}));
  EXPECT_EQ(p2.lengths(), (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(p3.lengths(), (std::vector<std::size_t>{2, 1, 1}));
  for (const auto* p : {&p1, &p2, &p3}) EXPECT_EQ(p->total_matched, 4u);
  // Reported as 0.24 / 0.30 / 0.45; the exact values are frozen from an
  // independent calculation.
  EXPECT_NEAR(p1.entropy, 0.24421905028821556, 1e-12);
  EXPECT_NEAR(p2.entropy, 0.3010299956639812, 1e-12);
  EXPECT_NEAR(p3.entropy, 0.45154499349597177, 1e-12);
  EXPECT_NEAR(p1.entropy, 0.24, 0.005);
  EXPECT_NEAR(p2.entropy, 0.30, 0.005);
  EXPECT_NEAR(p3.entropy, 0.45, 0.005);
}

TEST(ExtractChunks, OrderMustAgreeInBothSides) {
  Alignment a;
  a.hyp_length = a.ref_length = 4;
  // Adjacent in hyp but reversed in ref: two chunks.
  a.pairs = {{0, 1, StageKind::exact}, {1, 0, StageKind::exact}};
  EXPECT_EQ(extract_chunks(a).count(), 2u);
  // Adjacent in ref but not in hyp: two chunks.
  a.pairs = {{0, 0, StageKind::exact}, {2, 1, StageKind::exact}};
  EXPECT_EQ(extract_chunks(a).count(), 2u);
  a.pairs = {{1, 2, StageKind::exact}, {2, 3, StageKind::exact}};
  auto p = extract_chunks(a);
  ASSERT_EQ(p.count(), 1u);
  EXPECT_EQ(p.chunks[0], (Chunk{1, 2, 2}));
}

TEST(ExtractChunks, Empty) {
  auto p = extract_chunks(Alignment{});
  EXPECT_EQ(p.count(), 0u);
  EXPECT_EQ(p.total_matched, 0u);
  EXPECT_EQ(p.entropy, 0.0);
}

TEST(ChunkEntropy, AgreesWithDirectFormula) {
  std::mt19937 rng(2);
  std::uniform_int_distribution<std::size_t> count(1, 8), len(1, 6);
  for (int iter = 0; iter < 1000; ++iter) {
    std::vector<std::size_t> lengths(count(rng));
    for (auto& l : lengths) l = len(rng);
    EXPECT_NEAR(chunk_entropy(lengths), testing::entropy_oracle(lengths), 1e-12);
  }
}

TEST(ChunkEntropy, Bounds) {
  std::mt19937 rng(4);
  std::uniform_int_distribution<std::size_t> count(0, 8), len(1, 5);
  for (int iter = 0; iter < 1000; ++iter) {
    std::vector<std::size_t> lengths(count(rng));
    for (auto& l : lengths) l = len(rng);
    auto p = extract_chunks(alignment_with_chunks(lengths));
    std::size_t sum = 0;
    for (auto l : p.lengths()) sum += l;
    EXPECT_EQ(sum, p.total_matched);
    EXPECT_GE(p.entropy, 0.0);
    EXPECT_EQ(p.entropy == 0.0, p.count() <= 1);
    if (p.total_matched >= 1) {
      const double max_h = std::log10(static_cast<double>(p.total_matched));
      EXPECT_LE(p.entropy, max_h);
      const bool singletons = std::all_of(lengths.begin(), lengths.end(), [](auto l) { return l == 1; });
      EXPECT_EQ(p.entropy == max_h, singletons);
    }
  }
}

TEST(ChunkEntropy, MergingSingletonsLowersEntropy) {
  // (1,1,rest...) -> (2,rest...)
  std::mt19937 rng(8);
  std::uniform_int_distribution<std::size_t> count(0, 5), len(1, 5);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<std::size_t> rest(count(rng));
    for (auto& l : rest) l = len(rng);
    std::vector<std::size_t> split = {1, 1};
    split.insert(split.end(), rest.begin(), rest.end());
    std::vector<std::size_t> merged = {2};
    merged.insert(merged.end(), rest.begin(), rest.end());
    EXPECT_LT(chunk_entropy(merged), chunk_entropy(split));
  }
}

TEST(ChunkEntropy, UnequalLengthsScoreLower) {
  const std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> cases = {
      {{3, 1}, {2, 2}}, {{4, 1}, {3, 2}}, {{5, 1}, {3, 3}}, {{4, 1, 1}, {2, 2, 2}}, {{8, 4}, {6, 6}}};
  for (const auto& [uneven, even] : cases) {
    EXPECT_LT(testing::entropy_oracle(uneven), testing::entropy_oracle(even));
    EXPECT_LT(chunk_entropy(uneven), chunk_entropy(even));
  }
}

TEST(LengthPenalty, Values) {
  EXPECT_EQ(length_penalty(6, 6, 1.12), 1.0);
  EXPECT_EQ(length_penalty(6, 6, 1.9), 1.0);
  EXPECT_DOUBLE_EQ(length_penalty(6, 3, 2.0), 2.0);
  EXPECT_NEAR(length_penalty(5, 8, 1.12), 1.0434142376907745, 1e-12);
  EXPECT_GT(length_penalty(7, 6, 1.12), 1.0);
  EXPECT_THROW(length_penalty(3, 0, 1.12), DegenerateReferenceError);
}

TEST(EntScore, Values) {
  auto p1 = paper_profile(testing::kHyp1);
  EXPECT_NEAR(ent_score(p1, 6, 6, {1.05, 1.12, true}), 0.9881552207450551, 1e-12);
  ChunkProfile single = extract_chunks(alignment_with_chunks({5}));
  EXPECT_EQ(ent_score(single, 5, 9, EntParams::standalone()), 1.0);
  EXPECT_EQ(ent_score(ChunkProfile{}, 3, 5, EntParams::standalone()), 1.0);
  EXPECT_THROW(ent_score(p1, 6, 0, EntParams::standalone()), DegenerateReferenceError);
  // Without the length penalty an empty reference is not consulted.
  EXPECT_NO_THROW(ent_score(p1, 6, 0, EntParams::for_bleu()));
}

TEST(EntScore, PaperOrdering) {
  auto p1 = paper_profile(testing::kHyp1);
  auto p2 = paper_profile(testing::kHyp2);
  auto p3 = paper_profile(testing::kHyp3);
  for (double alpha : {1.05, 1.2, 1.5}) {
    EntParams params{alpha, 1.12, true};
    EXPECT_GT(ent_score(p1, 6, 6, params), ent_score(p2, 6, 6, params));
    EXPECT_GT(ent_score(p2, 6, 6, params), ent_score(p3, 6, 6, params));
  }
}

TEST(EntScore, Monotonicity) {
  const EntParams params = EntParams::standalone();
  std::vector<std::size_t> lengths[] = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  double previous = 2.0;
  for (const auto& l : lengths) {
    auto p = extract_chunks(alignment_with_chunks(l));
    double s = ent_score(p, 10, 10, params);
    EXPECT_GT(s, 0.0);
    EXPECT_LE(s, 1.0);
    EXPECT_LT(s, previous);
    previous = s;
  }
  // Longer length mismatch -> larger LP -> lower score when H > 0.
  auto p = extract_chunks(alignment_with_chunks({2, 2}));
  EXPECT_GT(ent_score(p, 10, 10, params), ent_score(p, 11, 10, params));
  EXPECT_GT(ent_score(p, 11, 10, params), ent_score(p, 14, 10, params));
  EXPECT_GT(ent_score(p, 10, 10, params), ent_score(p, 7, 10, params));
}

TEST(EntParams, Validation) {
  EXPECT_NO_THROW(EntParams::standalone().validate());
  EXPECT_NO_THROW(EntParams::for_bleu().validate());
  EXPECT_THROW((EntParams{1.0, 1.12, true}.validate()), ConfigError);
  EXPECT_THROW((EntParams{1.5, 0.9, true}.validate()), ConfigError);
  EXPECT_THROW((EntParams{NAN, 1.12, true}.validate()), ConfigError);
}

}  // namespace
}  // namespace entmt
