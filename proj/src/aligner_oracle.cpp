// Exhaustive reference aligner. Deliberately shares no search code with
// align(): it enumerates every one-to-one subset of the candidate list.

#include <algorithm>
#include <string>

#include "entmt/aligner.hpp"
#include "entmt/error.hpp"

namespace entmt {

namespace {

struct Enumerator {
  const std::vector<MatchPair>& cands;
  std::vector<char> hyp_used;
  std::vector<char> ref_used;
  std::vector<MatchPair> chosen;
  std::vector<MatchPair> best;
  std::size_t best_chunks = 0;
  bool found = false;

  static std::size_t chunks_of(const std::vector<MatchPair>& pairs) {
    std::size_t c = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      bool joins = k > 0 && pairs[k].hyp == pairs[k - 1].hyp + 1 && pairs[k].ref == pairs[k - 1].ref + 1;
      if (!joins) ++c;
    }
    return c;
  }

  bool better(const std::vector<MatchPair>& a, std::size_t a_chunks) const {
    if (!found) return true;
    if (a.size() != best.size()) return a.size() > best.size();
    if (a_chunks != best_chunks) return a_chunks < best_chunks;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k].ref != best[k].ref) return a[k].ref < best[k].ref;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k].hyp != best[k].hyp) return a[k].hyp < best[k].hyp;
    return false;
  }

  void visit(std::size_t k) {
    if (k == cands.size()) {
      std::vector<MatchPair> sorted = chosen;
      std::sort(sorted.begin(), sorted.end(),
                [](const MatchPair& a, const MatchPair& b) { return a.hyp < b.hyp; });
      const std::size_t c = chunks_of(sorted);
      if (better(sorted, c)) {
        best = std::move(sorted);
        best_chunks = c;
        found = true;
      }
      return;
    }
    const MatchPair& p = cands[k];
    if (!hyp_used[p.hyp] && !ref_used[p.ref]) {
      hyp_used[p.hyp] = ref_used[p.ref] = 1;
      chosen.push_back(p);
      visit(k + 1);
      chosen.pop_back();
      hyp_used[p.hyp] = ref_used[p.ref] = 0;
    }
    visit(k + 1);
  }
};

}  // namespace

Alignment brute_force_align_candidates(const std::vector<MatchPair>& candidates,
                                       std::size_t hyp_length, std::size_t ref_length) {
  if (hyp_length > kOracleMaxHypLength)
    throw OracleLimitError("brute-force aligner: hypothesis length " + std::to_string(hyp_length) +
                           " exceeds " + std::to_string(kOracleMaxHypLength));
  if (candidates.size() > kOracleMaxCandidates)
    throw OracleLimitError("brute-force aligner: " + std::to_string(candidates.size()) +
                           " candidates exceeds " + std::to_string(kOracleMaxCandidates));
  Enumerator e{candidates, std::vector<char>(hyp_length, 0), std::vector<char>(ref_length, 0), {}, {}, 0, false};
  e.visit(0);
  Alignment out;
  out.hyp_length = hyp_length;
  out.ref_length = ref_length;
  out.pairs = std::move(e.best);
  return out;
}

Alignment brute_force_align(const Segment& hyp, const Segment& ref,
                            const std::vector<MatcherStage>& stages) {
  return brute_force_align_candidates(word_matches(hyp, ref, stages), hyp.length(), ref.length());
}

}  // namespace entmt
