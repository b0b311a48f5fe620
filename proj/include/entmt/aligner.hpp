#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string_view>
#include <vector>

#include "entmt/resources.hpp"
#include "entmt/text.hpp"

namespace entmt {

// Declaration order is match priority: exact > stem > synonym > paraphrase.
enum class StageKind { exact = 0, stem = 1, synonym = 2, paraphrase = 3 };

std::string_view to_string(StageKind kind);
StageKind parse_stage_kind(std::string_view name);  // throws ConfigError

struct MatcherStage {
  StageKind kind = StageKind::exact;
  std::shared_ptr<const StemRules> stem_rules;
  std::shared_ptr<const SynonymLexicon> synonyms;
  std::shared_ptr<const ParaphraseTable> paraphrases;

  static MatcherStage exact() { return {}; }
  static MatcherStage stem(std::shared_ptr<const StemRules> rules);
  static MatcherStage synonym(std::shared_ptr<const SynonymLexicon> lexicon);
  static MatcherStage paraphrase(std::shared_ptr<const ParaphraseTable> table);

  bool has_resource() const;
};

// Throws ConfigError when the list is empty, repeats a stage, or a stage lacks
// its resource.
void validate_stages(const std::vector<MatcherStage>& stages);

struct MatchPair {
  std::size_t hyp = 0;
  std::size_t ref = 0;
  StageKind stage = StageKind::exact;

  bool operator==(const MatchPair&) const = default;
};

struct Alignment {
  std::vector<MatchPair> pairs;  // sorted by hyp index, one-to-one
  std::size_t hyp_length = 0;
  std::size_t ref_length = 0;

  std::size_t size() const { return pairs.size(); }
  bool operator==(const Alignment&) const = default;
};

// Every (hyp, ref) token pair matched by some stage, tagged with the
// highest-priority matching stage. Sorted by (hyp, ref).
std::vector<MatchPair> word_matches(const Segment& hyp, const Segment& ref,
                                    const std::vector<MatcherStage>& stages);

struct AlignOptions {
  // Candidate counts up to this limit are searched exhaustively.
  std::size_t exact_search_limit = 30;
  // Larger inputs: beam search over hyp positions, whose result seeds a
  // branch-and-bound refinement capped at refine_node_budget nodes
  // (0 returns the beam result as is).
  std::size_t beam_width = 40;
  std::size_t refine_node_budget = 200000;
};

// One-to-one alignment with the most pairs; among those, the fewest chunks;
// remaining ties go to the lexicographically smallest ref-index sequence
// (pairs in hyp order), then the smallest hyp-index sequence.
Alignment align(const Segment& hyp, const Segment& ref, const std::vector<MatcherStage>& stages,
                const AlignOptions& options = {});

// Same objective, solved from a precomputed candidate list.
Alignment align_candidates(const std::vector<MatchPair>& candidates, std::size_t hyp_length,
                           std::size_t ref_length, const AlignOptions& options = {});

inline constexpr std::size_t kOracleMaxHypLength = 10;
inline constexpr std::size_t kOracleMaxCandidates = 20;

// Exhaustive enumeration of every one-to-one subset of candidates. Test
// oracle; throws OracleLimitError past the size limits above.
Alignment brute_force_align(const Segment& hyp, const Segment& ref,
                            const std::vector<MatcherStage>& stages);
Alignment brute_force_align_candidates(const std::vector<MatchPair>& candidates,
                                       std::size_t hyp_length, std::size_t ref_length);

}  // namespace entmt
