#include "entmt/fluency.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "entmt/error.hpp"

namespace entmt {

std::vector<std::size_t> ChunkProfile::lengths() const {
  std::vector<std::size_t> out;
  out.reserve(chunks.size());
  for (const auto& c : chunks) out.push_back(c.length);
  return out;
}

double chunk_entropy(std::span<const std::size_t> lengths) {
  if (lengths.size() <= 1) return 0.0;
  const std::size_t total = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
  const double L = static_cast<double>(total);
  // -sum (l/L) log(l/L) rewritten as log L - (1/L) sum l log l; the l log l
  // terms vanish for l == 1, so all-singleton profiles give log10(L) exactly.
  double weighted = 0.0;
  for (std::size_t l : lengths) {
    if (l > 1) weighted += static_cast<double>(l) * std::log10(static_cast<double>(l));
  }
  return std::max(0.0, std::log10(L) - weighted / L);
}

ChunkProfile extract_chunks(const Alignment& alignment) {
  std::vector<MatchPair> pairs = alignment.pairs;
  std::sort(pairs.begin(), pairs.end(), [](const MatchPair& a, const MatchPair& b) { return a.hyp < b.hyp; });

  ChunkProfile profile;
  for (const auto& p : pairs) {
    if (!profile.chunks.empty()) {
      Chunk& last = profile.chunks.back();
      if (p.hyp == last.hyp_start + last.length && p.ref == last.ref_start + last.length) {
        ++last.length;
        continue;
      }
    }
    profile.chunks.push_back({p.hyp, p.ref, 1});
  }
  profile.total_matched = pairs.size();
  const auto lengths = profile.lengths();
  profile.entropy = chunk_entropy(lengths);
  return profile;
}

void EntParams::validate() const {
  if (!(alpha > 1.0) || !std::isfinite(alpha))
    throw ConfigError("ENT alpha must be > 1, got " + std::to_string(alpha));
  if (!(beta > 1.0) || !std::isfinite(beta))
    throw ConfigError("ENT beta must be > 1, got " + std::to_string(beta));
}

double length_penalty(std::size_t hyp_length, std::size_t ref_length, double beta) {
  if (ref_length == 0) throw DegenerateReferenceError("length penalty undefined for an empty reference");
  if (hyp_length == ref_length) return 1.0;
  const double ratio = static_cast<double>(hyp_length) / static_cast<double>(ref_length);
  return std::pow(beta, std::abs(ratio - 1.0));
}

double ent_score(const ChunkProfile& profile, std::size_t hyp_length, std::size_t ref_length,
                 const EntParams& params) {
  const double lp = params.apply_length_penalty ? length_penalty(hyp_length, ref_length, params.beta) : 1.0;
  if (profile.entropy == 0.0) return 1.0;
  return std::pow(params.alpha, -profile.entropy * lp);
}

}  // namespace entmt
