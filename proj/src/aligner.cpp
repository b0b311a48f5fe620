#include "entmt/aligner.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

#include "entmt/error.hpp"

namespace entmt {

std::string_view to_string(StageKind kind) {
  switch (kind) {
    case StageKind::exact: return "exact";
    case StageKind::stem: return "stem";
    case StageKind::synonym: return "synonym";
    case StageKind::paraphrase: return "paraphrase";
  }
  return "unknown";
}

StageKind parse_stage_kind(std::string_view name) {
  if (name == "exact") return StageKind::exact;
  if (name == "stem") return StageKind::stem;
  if (name == "synonym") return StageKind::synonym;
  if (name == "paraphrase") return StageKind::paraphrase;
  throw ConfigError("unknown matcher stage '" + std::string(name) + "'");
}

MatcherStage MatcherStage::stem(std::shared_ptr<const StemRules> rules) {
  MatcherStage s;
  s.kind = StageKind::stem;
  s.stem_rules = std::move(rules);
  return s;
}

MatcherStage MatcherStage::synonym(std::shared_ptr<const SynonymLexicon> lexicon) {
  MatcherStage s;
  s.kind = StageKind::synonym;
  s.synonyms = std::move(lexicon);
  return s;
}

MatcherStage MatcherStage::paraphrase(std::shared_ptr<const ParaphraseTable> table) {
  MatcherStage s;
  s.kind = StageKind::paraphrase;
  s.paraphrases = std::move(table);
  return s;
}

bool MatcherStage::has_resource() const {
  switch (kind) {
    case StageKind::exact: return true;
    case StageKind::stem: return stem_rules != nullptr;
    case StageKind::synonym: return synonyms != nullptr;
    case StageKind::paraphrase: return paraphrases != nullptr;
  }
  return false;
}

void validate_stages(const std::vector<MatcherStage>& stages) {
  if (stages.empty()) throw ConfigError("no matcher stages configured");
  bool seen[4] = {false, false, false, false};
  for (const auto& stage : stages) {
    auto k = static_cast<std::size_t>(stage.kind);
    if (seen[k]) throw ConfigError("matcher stage '" + std::string(to_string(stage.kind)) + "' listed twice");
    seen[k] = true;
    if (!stage.has_resource())
      throw ConfigError("matcher stage '" + std::string(to_string(stage.kind)) + "' requires a resource file");
  }
}

namespace {

bool stage_matches(const MatcherStage& stage, const Token& h, const Token& r) {
  switch (stage.kind) {
    case StageKind::exact: return h.norm == r.norm;
    case StageKind::stem: return stage.stem_rules->stem(h.norm) == stage.stem_rules->stem(r.norm);
    case StageKind::synonym: return stage.synonyms->synonymous(h.norm, r.norm);
    case StageKind::paraphrase: return stage.paraphrases->paraphrase(h.norm, r.norm);
  }
  return false;
}

struct Edge {
  std::size_t ref;
  StageKind stage;
};

// Candidate pairs grouped by hyp position, refs ascending.
struct CandidateGraph {
  std::size_t hyp_length = 0;
  std::size_t ref_length = 0;
  std::vector<std::vector<Edge>> edges;

  CandidateGraph(const std::vector<MatchPair>& candidates, std::size_t hyp_len, std::size_t ref_len)
      : hyp_length(hyp_len), ref_length(ref_len), edges(hyp_len) {
    for (const auto& c : candidates) {
      if (c.hyp >= hyp_len || c.ref >= ref_len) throw std::out_of_range("candidate index out of range");
      edges[c.hyp].push_back({c.ref, c.stage});
    }
    for (auto& e : edges)
      std::sort(e.begin(), e.end(), [](const Edge& a, const Edge& b) { return a.ref < b.ref; });
  }
};

// Kuhn's augmenting-path bipartite matching.
std::size_t max_matching(const CandidateGraph& g) {
  std::vector<std::size_t> ref_owner(g.ref_length, std::numeric_limits<std::size_t>::max());
  std::vector<char> visited;
  auto augment = [&](auto&& self, std::size_t i) -> bool {
    for (const auto& e : g.edges[i]) {
      if (visited[e.ref]) continue;
      visited[e.ref] = 1;
      if (ref_owner[e.ref] == std::numeric_limits<std::size_t>::max() || self(self, ref_owner[e.ref])) {
        ref_owner[e.ref] = i;
        return true;
      }
    }
    return false;
  };
  std::size_t size = 0;
  for (std::size_t i = 0; i < g.hyp_length; ++i) {
    visited.assign(g.ref_length, 0);
    if (augment(augment, i)) ++size;
  }
  return size;
}

// Upper bound on pairs still addable from hyp positions >= from.
std::size_t remaining_bound(const CandidateGraph& g, std::size_t from, const std::vector<char>& used,
                            std::vector<char>& scratch) {
  scratch.assign(g.ref_length, 0);
  std::size_t hyps = 0, refs = 0;
  for (std::size_t i = from; i < g.hyp_length; ++i) {
    bool any = false;
    for (const auto& e : g.edges[i]) {
      if (used[e.ref]) continue;
      any = true;
      if (!scratch[e.ref]) {
        scratch[e.ref] = 1;
        ++refs;
      }
    }
    hyps += any;
  }
  return std::min(hyps, refs);
}

// Strict tiebreak order: ref-index sequence, then hyp-index sequence.
bool tiebreak_less(const std::vector<MatchPair>& a, const std::vector<MatchPair>& b) {
  auto ref_less = [](const MatchPair& x, const MatchPair& y) { return x.ref < y.ref; };
  auto hyp_less = [](const MatchPair& x, const MatchPair& y) { return x.hyp < y.hyp; };
  if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), ref_less)) return true;
  if (std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end(), ref_less)) return false;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), hyp_less);
}

// Depth-first branch and bound over hyp positions, restricted to alignments
// of exactly `target` pairs (the maximum matching size). With a node budget
// the search stops early and returns the best alignment seen so far.
class ExactSearch {
 public:
  ExactSearch(const CandidateGraph& g, std::size_t target, std::size_t node_budget = 0)
      : g_(g), target_(target), budget_(node_budget), used_(g.ref_length, 0) {}

  // Starting incumbent; ignored unless it has `target` pairs.
  void seed(std::vector<MatchPair> pairs, std::size_t chunks) {
    if (pairs.size() != target_) return;
    best_ = std::move(pairs);
    best_chunks_ = chunks;
    found_ = true;
  }

  std::vector<MatchPair> run() {
    if (target_ == 0) return {};
    dfs(0);
    return best_;
  }

  bool exhausted() const { return budget_ != 0 && nodes_ >= budget_; }

 private:
  void dfs(std::size_t i) {
    if (budget_ != 0 && ++nodes_ > budget_) return;
    if (current_.size() == target_) {
      consider();
      return;
    }
    if (i == g_.hyp_length) return;
    if (current_.size() + remaining_bound(g_, i, used_, scratch_) < target_) return;

    const bool can_extend = !current_.empty() && current_.back().hyp + 1 == i;
    const std::size_t chunk_floor = chunks_ + (can_extend ? 0 : 1);
    if (found_) {
      if (chunk_floor > best_chunks_) return;
      if (chunk_floor == best_chunks_ && ref_prefix_greater()) return;
    }

    for (const auto& e : g_.edges[i]) {
      if (used_[e.ref]) continue;
      const bool extends = can_extend && current_.back().ref + 1 == e.ref;
      used_[e.ref] = 1;
      current_.push_back({i, e.ref, e.stage});
      chunks_ += extends ? 0 : 1;
      dfs(i + 1);
      chunks_ -= extends ? 0 : 1;
      current_.pop_back();
      used_[e.ref] = 0;
    }
    dfs(i + 1);
  }

  bool ref_prefix_greater() const {
    for (std::size_t k = 0; k < current_.size(); ++k) {
      if (current_[k].ref != best_[k].ref) return current_[k].ref > best_[k].ref;
    }
    return false;
  }

  void consider() {
    if (!found_ || chunks_ < best_chunks_ ||
        (chunks_ == best_chunks_ && tiebreak_less(current_, best_))) {
      best_ = current_;
      best_chunks_ = chunks_;
      found_ = true;
    }
  }

  const CandidateGraph& g_;
  std::size_t target_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<char> used_;
  std::vector<char> scratch_;
  std::vector<MatchPair> current_;
  std::size_t chunks_ = 0;
  std::vector<MatchPair> best_;
  std::size_t best_chunks_ = 0;
  bool found_ = false;
};

struct BeamState {
  std::vector<char> used;
  std::vector<MatchPair> pairs;
  std::size_t chunks = 0;
  std::size_t bound = 0;    // pairs + remaining_bound
  bool extendable = false;  // the open chunk can grow at the next hyp position
};

// (more pairs, fewer chunks, tiebreak)
bool final_better(const BeamState& a, const BeamState& b) {
  if (a.pairs.size() != b.pairs.size()) return a.pairs.size() > b.pairs.size();
  if (a.chunks != b.chunks) return a.chunks < b.chunks;
  return tiebreak_less(a.pairs, b.pairs);
}

bool rank_better(const BeamState& a, const BeamState& b) {
  if (a.bound != b.bound) return a.bound > b.bound;
  if (a.chunks != b.chunks) return a.chunks < b.chunks;
  if (a.extendable != b.extendable) return a.extendable;
  return final_better(a, b);
}

BeamState beam_search(const CandidateGraph& g, std::size_t width) {
  std::vector<char> scratch;
  std::vector<BeamState> beam(1);
  beam[0].used.assign(g.ref_length, 0);

  for (std::size_t i = 0; i < g.hyp_length; ++i) {
    std::vector<BeamState> next;
    // States with equal used refs and equal open-chunk end have equal futures.
    std::map<std::pair<std::vector<char>, std::size_t>, std::size_t> seen;
    auto offer = [&](BeamState&& s) {
      const std::size_t open_end =
          !s.pairs.empty() && s.pairs.back().hyp == i ? s.pairs.back().ref : std::numeric_limits<std::size_t>::max();
      s.bound = s.pairs.size() + remaining_bound(g, i + 1, s.used, scratch);
      s.extendable = false;
      if (open_end != std::numeric_limits<std::size_t>::max() && i + 1 < g.hyp_length) {
        for (const auto& e : g.edges[i + 1])
          if (e.ref == open_end + 1 && !s.used[e.ref]) s.extendable = true;
      }
      auto key = std::make_pair(s.used, open_end);
      auto it = seen.find(key);
      if (it == seen.end()) {
        seen.emplace(std::move(key), next.size());
        next.push_back(std::move(s));
      } else if (final_better(s, next[it->second])) {
        next[it->second] = std::move(s);
      }
    };

    for (const auto& state : beam) {
      const bool can_extend = !state.pairs.empty() && state.pairs.back().hyp + 1 == i;
      for (const auto& e : g.edges[i]) {
        if (state.used[e.ref]) continue;
        BeamState s = state;
        const bool extends = can_extend && state.pairs.back().ref + 1 == e.ref;
        s.used[e.ref] = 1;
        s.pairs.push_back({i, e.ref, e.stage});
        s.chunks += extends ? 0 : 1;
        offer(std::move(s));
      }
      offer(BeamState(state));
    }

    std::sort(next.begin(), next.end(), rank_better);
    if (next.size() > width) next.resize(width);
    beam = std::move(next);
  }
  return *std::min_element(beam.begin(), beam.end(), final_better);
}

}  // namespace

std::vector<MatchPair> word_matches(const Segment& hyp, const Segment& ref,
                                    const std::vector<MatcherStage>& stages) {
  validate_stages(stages);
  std::vector<const MatcherStage*> ordered;
  for (const auto& s : stages) ordered.push_back(&s);
  std::sort(ordered.begin(), ordered.end(),
            [](const MatcherStage* a, const MatcherStage* b) { return a->kind < b->kind; });

  std::vector<MatchPair> out;
  for (std::size_t i = 0; i < hyp.length(); ++i) {
    for (std::size_t j = 0; j < ref.length(); ++j) {
      for (const MatcherStage* stage : ordered) {
        if (stage_matches(*stage, hyp[i], ref[j])) {
          out.push_back({i, j, stage->kind});
          break;
        }
      }
    }
  }
  return out;
}

Alignment align_candidates(const std::vector<MatchPair>& candidates, std::size_t hyp_length,
                           std::size_t ref_length, const AlignOptions& options) {
  CandidateGraph g(candidates, hyp_length, ref_length);
  Alignment out;
  out.hyp_length = hyp_length;
  out.ref_length = ref_length;
  if (candidates.empty()) return out;
  const std::size_t target = max_matching(g);
  if (candidates.size() <= options.exact_search_limit) {
    out.pairs = ExactSearch(g, target).run();
    return out;
  }
  BeamState beam = beam_search(g, std::max<std::size_t>(options.beam_width, 1));
  if (options.refine_node_budget == 0) {
    out.pairs = std::move(beam.pairs);
    return out;
  }
  ExactSearch refine(g, target, options.refine_node_budget);
  refine.seed(beam.pairs, beam.chunks);
  out.pairs = refine.run();
  if (out.pairs.empty()) out.pairs = std::move(beam.pairs);
  return out;
}

Alignment align(const Segment& hyp, const Segment& ref, const std::vector<MatcherStage>& stages,
                const AlignOptions& options) {
  return align_candidates(word_matches(hyp, ref, stages), hyp.length(), ref.length(), options);
}

}  // namespace entmt
