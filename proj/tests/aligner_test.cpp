#include <gtest/gtest.h>

#include <memory>
#include <random>
#include <set>

#include "entmt/aligner.hpp"
#include "entmt/error.hpp"
#include "entmt/fluency.hpp"
#include "test_util.hpp"

namespace entmt {
namespace {

const std::vector<MatcherStage> kExact = {MatcherStage::exact()};

std::size_t chunks(const Alignment& a) { return extract_chunks(a).count(); }

void expect_one_to_one(const Alignment& a) {
  std::set<std::size_t> hyps, refs;
  for (std::size_t k = 0; k < a.pairs.size(); ++k) {
    EXPECT_TRUE(hyps.insert(a.pairs[k].hyp).second);
    EXPECT_TRUE(refs.insert(a.pairs[k].ref).second);
    EXPECT_LT(a.pairs[k].hyp, a.hyp_length);
    EXPECT_LT(a.pairs[k].ref, a.ref_length);
    if (k) EXPECT_LT(a.pairs[k - 1].hyp, a.pairs[k].hyp);
  }
}

TEST(WordMatches, PaperHyp1CoversFourWords) {
  auto cands = word_matches(tokenize(testing::kHyp1), tokenize(testing::kRef), kExact);
  std::set<std::size_t> hyp_positions;
  for (const auto& c : cands) hyp_positions.insert(c.hyp);
  EXPECT_EQ(hyp_positions, (std::set<std::size_t>{0, 1, 2, 5}));
}

TEST(WordMatches, IdentityDiagonal) {
  auto seg = tokenize("a b c d");
  auto cands = word_matches(seg, seg, kExact);
  ASSERT_EQ(cands.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(cands[i], (MatchPair{i, i, StageKind::exact}));
}

TEST(WordMatches, StemStage) {
  auto rules = std::make_shared<StemRules>(std::vector<std::pair<std::string, std::string>>{{"s", ""}});
  auto cands = word_matches(tokenize("cats"), tokenize("cat"), {MatcherStage::exact(), MatcherStage::stem(rules)});
  ASSERT_EQ(cands.size(), 1u);
  EXPECT_EQ(cands[0], (MatchPair{0, 0, StageKind::stem}));
}

TEST(WordMatches, PriorityTagsHighestStage) {
  auto rules = std::make_shared<StemRules>(std::vector<std::pair<std::string, std::string>>{{"s", ""}});
  auto lex = std::make_shared<SynonymLexicon>();
  lex->add_class({"books", "tome"});
  // Listed out of priority order on purpose.
  std::vector<MatcherStage> stages = {MatcherStage::synonym(lex), MatcherStage::stem(rules), MatcherStage::exact()};
  auto cands = word_matches(tokenize("books tome"), tokenize("books"), stages);
  ASSERT_EQ(cands.size(), 2u);
  EXPECT_EQ(cands[0].stage, StageKind::exact);
  EXPECT_EQ(cands[1].stage, StageKind::synonym);
}

TEST(WordMatches, SynonymAndParaphrase) {
  auto lex = std::make_shared<SynonymLexicon>();
  lex->add_class({"desk", "table"});
  auto para = std::make_shared<ParaphraseTable>();
  para->add({"that"}, {"the"});
  para->add({"on", "the"}, {"upon"});
  EXPECT_EQ(para->multiword_entries(), 1u);

  std::vector<MatcherStage> stages = {MatcherStage::exact(), MatcherStage::synonym(lex), MatcherStage::paraphrase(para)};
  auto cands = word_matches(tokenize("the table"), tokenize("that desk"), stages);
  ASSERT_EQ(cands.size(), 2u);
  EXPECT_EQ(cands[0], (MatchPair{0, 0, StageKind::paraphrase}));  // symmetric lookup
  EXPECT_EQ(cands[1], (MatchPair{1, 1, StageKind::synonym}));
  // "upon" only appears in a multi-word entry, which is ignored.
  EXPECT_TRUE(word_matches(tokenize("upon"), tokenize("on"), stages).empty());
}

TEST(WordMatches, ConfigurationErrors) {
  auto a = tokenize("a");
  EXPECT_THROW(word_matches(a, a, {}), ConfigError);
  EXPECT_THROW(word_matches(a, a, {MatcherStage{StageKind::synonym, nullptr, nullptr, nullptr}}), ConfigError);
  EXPECT_THROW(word_matches(a, a, {MatcherStage{StageKind::paraphrase, nullptr, nullptr, nullptr}}), ConfigError);
  EXPECT_THROW(word_matches(a, a, {MatcherStage::exact(), MatcherStage::exact()}), ConfigError);
  EXPECT_THROW(parse_stage_kind("fuzzy"), ConfigError);
}

TEST(Align, PaperExamples) {
  const auto ref = tokenize(testing::kRef);
  auto a1 = align(tokenize(testing::kHyp1), ref, kExact);
  auto a2 = align(tokenize(testing::kHyp2), ref, kExact);
  auto a3 = align(tokenize(testing::kHyp3), ref, kExact);
  EXPECT_EQ(a1.size(), 4u);
  EXPECT_EQ(chunks(a1), 2u);
  EXPECT_EQ(a2.size(), 4u);
  EXPECT_EQ(chunks(a2), 2u);
  EXPECT_EQ(a3.size(), 4u);
  EXPECT_EQ(chunks(a3), 3u);
  // hyp2: (There, are) and (on, the)
  EXPECT_EQ(a2.pairs, (std::vector<MatchPair>{{0, 0, StageKind::exact},
                                             {1, 1, StageKind::exact},
                                             {3, 3, StageKind::exact},
                                             {4, 4, StageKind::exact}}));
}

TEST(Align, EmptyInputs) {
  EXPECT_EQ(align(tokenize("a b"), tokenize(""), kExact).size(), 0u);
  EXPECT_EQ(align(tokenize(""), tokenize("a b"), kExact).size(), 0u);
  EXPECT_EQ(align(tokenize("x y"), tokenize("a b"), kExact).size(), 0u);
}

TEST(Align, PrefersFewerChunks) {
  // hyp "a" can pair with ref 0 or ref 2; only ref 2 yields a single chunk.
  auto a = align(tokenize("a b c"), tokenize("a x a b c"), kExact);
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(chunks(a), 1u);
  EXPECT_EQ(a.pairs[0].ref, 2u);
}

TEST(Align, DeterministicTiebreak) {
  // Two equally good choices for a single "a": the smaller ref index wins.
  auto a = align(tokenize("a"), tokenize("a a"), kExact);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a.pairs[0].ref, 0u);
  // Equal ref sequences: the smaller hyp index wins.
  auto b = align(tokenize("a a"), tokenize("a"), kExact);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b.pairs[0].hyp, 0u);
}

TEST(Align, IdentityDistinctTokensIsOneChunk) {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<std::string> words;
    for (int i = 0; i < 40; ++i) words.push_back("t" + std::to_string(i));
    std::shuffle(words.begin(), words.end(), rng);
    std::string text;
    std::size_t n = 1 + rng() % 40;
    for (std::size_t i = 0; i < n; ++i) text += words[i] + " ";
    auto seg = tokenize(text);
    auto a = align(seg, seg, kExact);
    EXPECT_EQ(a.size(), n);
    EXPECT_EQ(chunks(a), 1u);
  }
}

TEST(Align, MatchesBruteForceOracle) {
  std::mt19937 rng(11);
  int compared = 0;
  while (compared < 400) {
    auto hyp = testing::random_segment(rng, 8, 5);
    auto ref = testing::random_segment(rng, 8, 5);
    auto cands = word_matches(hyp, ref, kExact);
    if (cands.size() > kOracleMaxCandidates) continue;
    auto fast = align(hyp, ref, kExact);
    auto slow = brute_force_align(hyp, ref, kExact);
    expect_one_to_one(fast);
    // Same objective and the same tiebreak, so the alignments are identical.
    EXPECT_EQ(fast, slow) << hyp.text() << " || " << ref.text();
    ++compared;
  }
}

TEST(Align, LongSegmentsAgainstExhaustiveSearch) {
  // Above the exhaustive limit the beam seeds a budgeted refinement. Compare
  // with the exhaustive search run with the limit lifted.
  std::mt19937 rng(9);
  AlignOptions exhaustive;
  exhaustive.exact_search_limit = 100000;
  AlignOptions beam_only;
  beam_only.refine_node_budget = 0;
  int cases = 0, optimal = 0;
  while (cases < 100) {
    auto hyp = testing::random_segment(rng, 16, 5, 12);
    auto ref = testing::random_segment(rng, 16, 5, 12);
    auto cands = word_matches(hyp, ref, kExact);
    if (cands.size() <= 30 || cands.size() > 70) continue;
    ++cases;
    auto exact = align(hyp, ref, kExact, exhaustive);
    auto fast = align(hyp, ref, kExact);
    auto beam = align(hyp, ref, kExact, beam_only);
    expect_one_to_one(fast);
    expect_one_to_one(beam);
    EXPECT_EQ(fast.size(), exact.size());
    EXPECT_GE(chunks(fast), chunks(exact));
    EXPECT_LE(beam.size(), exact.size());
    if (beam.size() == exact.size()) EXPECT_GE(chunks(beam), chunks(exact));
    optimal += chunks(fast) == chunks(exact);
  }
  EXPECT_GE(optimal, 95);
}

TEST(Align, LongRealisticSegmentIsFast) {
  std::string text;
  for (int i = 0; i < 60; ++i) text += (i % 7 == 0 ? "the " : "w" + std::to_string(i) + " ");
  auto ref = tokenize(text);
  auto a = align(ref, ref, kExact);
  EXPECT_EQ(a.size(), ref.length());
  EXPECT_EQ(chunks(a), 1u);
}

TEST(Align, AddingStagesNeverLosesPairs) {
  auto lex = std::make_shared<SynonymLexicon>();
  lex->add_class({"w0", "w3"});
  lex->add_class({"w1", "w5"});
  auto rules = std::make_shared<StemRules>(std::vector<std::pair<std::string, std::string>>{{"2", "4"}});
  std::mt19937 rng(19);
  for (int iter = 0; iter < 300; ++iter) {
    auto hyp = testing::random_segment(rng, 7, 6);
    auto ref = testing::random_segment(rng, 7, 6);
    std::size_t exact = align(hyp, ref, kExact).size();
    std::size_t stem = align(hyp, ref, {MatcherStage::exact(), MatcherStage::stem(rules)}).size();
    std::size_t all =
        align(hyp, ref, {MatcherStage::exact(), MatcherStage::stem(rules), MatcherStage::synonym(lex)}).size();
    EXPECT_LE(exact, stem);
    EXPECT_LE(stem, all);
  }
}

TEST(Align, Deterministic) {
  std::mt19937 rng(23);
  for (int iter = 0; iter < 100; ++iter) {
    auto hyp = testing::random_segment(rng, 20, 4);
    auto ref = testing::random_segment(rng, 20, 4);
    EXPECT_EQ(align(hyp, ref, kExact), align(hyp, ref, kExact));
  }
}

TEST(BruteForce, TrivialCases) {
  auto one = tokenize("x");
  auto a = brute_force_align(one, one, kExact);
  EXPECT_EQ(a.pairs, (std::vector<MatchPair>{{0, 0, StageKind::exact}}));
  EXPECT_EQ(brute_force_align(tokenize("a b"), tokenize("c d"), kExact).size(), 0u);
  auto h1 = brute_force_align(tokenize(testing::kHyp1), tokenize(testing::kRef), kExact);
  EXPECT_EQ(h1.size(), 4u);
  EXPECT_EQ(chunks(h1), 2u);
}

TEST(BruteForce, EnforcesLimits) {
  auto long_hyp = tokenize("a b c d e f g h i j k");
  EXPECT_THROW(brute_force_align(long_hyp, long_hyp, kExact), OracleLimitError);
  auto dense = tokenize("a a a a a");
  EXPECT_THROW(brute_force_align(dense, dense, kExact), OracleLimitError);  // 25 candidates
}

TEST(Resources, StemRulesLongestSuffixWins) {
  StemRules rules(std::vector<std::pair<std::string, std::string>>{{"s", ""}, {"ies", "y"}});
  EXPECT_EQ(rules.stem("flies"), "fly");
  EXPECT_EQ(rules.stem("cats"), "cat");
  EXPECT_EQ(rules.stem("s"), "s");  // must leave a non-empty stem
  EXPECT_EQ(rules.stem("dog"), "dog");
  EXPECT_THROW(StemRules(std::vector<std::pair<std::string, std::string>>{{"", "x"}}), ConfigError);
}

TEST(Resources, LoadFiles) {
  const std::filesystem::path data = ENTMT_TEST_DATA;
  auto rules = StemRules::load(data / "stem_rules.txt");
  EXPECT_EQ(rules.size(), 4u);
  EXPECT_EQ(rules.stem("books"), rules.stem("book"));
  auto lex = SynonymLexicon::load(data / "synonyms.txt");
  EXPECT_EQ(lex.class_count(), 3u);
  EXPECT_TRUE(lex.synonymous("table", "desk"));
  EXPECT_TRUE(lex.synonymous("desk", "table"));
  EXPECT_FALSE(lex.synonymous("desk", "book"));
  auto para = ParaphraseTable::load(data / "paraphrases.txt");
  EXPECT_EQ(para.multiword_entries(), 1u);
  EXPECT_TRUE(para.paraphrase("the", "that"));
  EXPECT_EQ(para.entries().size(), 3u);

  testing::TempDir dir;
  EXPECT_THROW(StemRules::load(dir.write("bad_rules", "s => x\n")), ConfigError);
  EXPECT_THROW(ParaphraseTable::load(dir.write("bad_para", "a ||| \n")), ConfigError);
  EXPECT_THROW(ParaphraseTable::load(dir.write("bad_para2", "a b c\n")), ConfigError);
  EXPECT_THROW(SynonymLexicon::load(dir.path() / "nope"), ConfigError);
}

}  // namespace
}  // namespace entmt
