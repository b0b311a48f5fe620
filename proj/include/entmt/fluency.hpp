#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "entmt/aligner.hpp"

namespace entmt {

struct Chunk {
  std::size_t hyp_start = 0;
  std::size_t ref_start = 0;
  std::size_t length = 0;

  bool operator==(const Chunk&) const = default;
};

/// Matched words grouped into chunks, with the entropy of the chunk-length
/// distribution (base-10 logarithm).
struct ChunkProfile {
  std::vector<Chunk> chunks;
  std::size_t total_matched = 0;
  double entropy = 0.0;

  std::size_t count() const { return chunks.size(); }
  std::vector<std::size_t> lengths() const;
};

/// Entropy of a chunk-length distribution, -sum (l/L) log10(l/L).
/// Zero for at most one chunk; exactly log10(L) when every chunk has length 1.
double chunk_entropy(std::span<const std::size_t> lengths);

/// Groups aligned pairs (in hyp order) into chunks: consecutive pairs join
/// when both their hyp and ref indices advance by exactly one.
ChunkProfile extract_chunks(const Alignment& alignment);

struct EntParams {
  double alpha = 1.5;
  double beta = 1.12;
  bool apply_length_penalty = true;

  void validate() const;  // throws ConfigError unless alpha > 1 and beta > 1

  static EntParams for_bleu() { return {1.05, 1.12, false}; }
  static EntParams for_meteor() { return {1.5, 1.12, true}; }
  static EntParams standalone() { return for_meteor(); }
};

/// beta^|hyp/ref - 1|. Throws DegenerateReferenceError when ref_length is 0.
double length_penalty(std::size_t hyp_length, std::size_t ref_length, double beta);

/// alpha^(-H * LP), LP fixed at 1 when the length penalty is disabled.
double ent_score(const ChunkProfile& profile, std::size_t hyp_length, std::size_t ref_length,
                 const EntParams& params);

}  // namespace entmt
