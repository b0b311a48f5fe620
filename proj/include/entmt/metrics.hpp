#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entmt/aligner.hpp"
#include "entmt/fluency.hpp"
#include "entmt/text.hpp"

namespace entmt {

enum class Smoothing { none, add_k };

struct BleuParams {
  std::size_t max_n = 4;
  std::vector<double> weights;  // empty means uniform 1/max_n
  Smoothing smoothing = Smoothing::add_k;
  double k = 1.0;

  std::vector<double> resolved_weights() const;
  void validate() const;
};

struct MeteorParams {
  double gamma = 0.9;  // recall weight in Fmean
  double x1 = 0.5;
  double x2 = 3.0;

  void validate() const;
};

// Clipped n-gram precision for n = 1..max_n. Add-k smoothing, when enabled,
// applies to n >= 2 only.
std::vector<double> ngram_precisions(const Segment& hyp, const Segment& ref, const BleuParams& params);

// BLEU brevity penalty: 1 when c > r, else exp(1 - r/c); 0 for an empty hypothesis.
double brevity_penalty(std::size_t hyp_length, std::size_t ref_length);

struct BleuResult {
  double score = 0.0;
  std::vector<double> precisions;
  double brevity_penalty = 0.0;
};

BleuResult bleu(const Segment& hyp, const Segment& ref, const BleuParams& params);

struct BleuEntResult {
  double score = 0.0;
  BleuResult bleu;
  ChunkProfile profile;
  double ent_factor = 1.0;  // alpha^-H
};

BleuEntResult bleu_ent(const Segment& hyp, const Segment& ref, const BleuParams& bleu_params,
                       const EntParams& ent_params, const std::vector<MatcherStage>& stages);
BleuEntResult bleu_ent(const Segment& hyp, const Segment& ref, const BleuParams& bleu_params,
                       const EntParams& ent_params, const Alignment& alignment);

// Unigram precision/recall over aligned words and their recall-weighted
// harmonic mean.
struct Fmean {
  double precision = 0.0;
  double recall = 0.0;
  double value = 0.0;
};

Fmean fmean(std::size_t matched, std::size_t hyp_length, std::size_t ref_length, double gamma);

struct MeteorResult {
  double score = 0.0;
  Fmean fmean;
  double penalty = 0.0;
  std::size_t chunks = 0;
  std::size_t matched = 0;
};

MeteorResult meteor_lite(const Segment& hyp, const Segment& ref, const MeteorParams& params,
                         const std::vector<MatcherStage>& stages);
MeteorResult meteor_lite(const Segment& hyp, const Segment& ref, const MeteorParams& params,
                         const Alignment& alignment);

struct MeteorEntResult {
  double score = 0.0;
  Fmean fmean;
  ChunkProfile profile;
  double length_penalty = 1.0;
  double ent_factor = 1.0;  // alpha^(-H * LP)
};

MeteorEntResult meteor_ent(const Segment& hyp, const Segment& ref, const MeteorParams& meteor_params,
                           const EntParams& ent_params, const std::vector<MatcherStage>& stages);
MeteorEntResult meteor_ent(const Segment& hyp, const Segment& ref, const MeteorParams& meteor_params,
                           const EntParams& ent_params, const Alignment& alignment);

struct EntResult {
  double score = 1.0;
  ChunkProfile profile;
  double length_penalty = 1.0;
};

EntResult ent(const Segment& hyp, const Segment& ref, const EntParams& params, const Alignment& alignment);

// ---------------------------------------------------------------------------
// Corpus scoring

enum class MetricKind { bleu, bleu_ent, meteor_lite, meteor_ent, ent };

std::string_view to_string(MetricKind kind);
MetricKind parse_metric_kind(std::string_view name);  // throws ConfigError

struct MetricConfig {
  MetricKind kind = MetricKind::bleu;
  BleuParams bleu;
  MeteorParams meteor;
  EntParams ent;

  // Defaults for the metric: alpha 1.05 without LP for bleu-ent, alpha 1.5
  // and beta 1.12 with LP for meteor-ent and ent.
  static MetricConfig defaults(MetricKind kind);
  void validate() const;
};

struct ScoringConfig {
  std::vector<MetricConfig> metrics;
  std::vector<MatcherStage> stages = {MatcherStage::exact()};
  AlignOptions align_options;

  void validate() const;
};

// Audit trail for one segment score. Fields a metric does not use stay empty.
struct ScoreComponents {
  std::size_t hyp_length = 0;
  std::size_t ref_length = 0;
  std::optional<std::vector<double>> precisions;
  std::optional<double> brevity_penalty;
  std::optional<std::vector<std::size_t>> chunk_lengths;
  std::optional<std::size_t> matched;
  std::optional<double> entropy;
  std::optional<double> length_penalty;
  std::optional<double> ent_factor;
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> fmean;
  std::optional<double> penalty;
};

struct SegmentScore {
  double score = 0.0;
  ScoreComponents components;
};

struct MetricReport {
  std::string metric;
  std::string system;
  std::vector<SegmentScore> segments;
  double corpus_score = 0.0;  // mean of segment scores
};

// Scores a single (hyp, ref) pair with a precomputed alignment.
SegmentScore score_segment(const Segment& hyp, const Segment& ref, const MetricConfig& metric,
                           const Alignment& alignment);

// One report per (metric, system), metric-major. Segments are scored in
// parallel with OpenMP; output is identical to score_corpus_serial.
std::vector<MetricReport> score_corpus(const ParallelCorpus& corpus, const ScoringConfig& config);

// Single-threaded reference implementation.
std::vector<MetricReport> score_corpus_serial(const ParallelCorpus& corpus, const ScoringConfig& config);

}  // namespace entmt
