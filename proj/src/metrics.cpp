#include "entmt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include "entmt/error.hpp"

namespace entmt {

namespace {

void require_reference(const Segment& ref) {
  if (ref.empty()) throw DegenerateReferenceError("empty reference segment");
}

std::unordered_map<std::string, std::size_t> count_ngrams(const Segment& seg, std::size_t n) {
  std::unordered_map<std::string, std::size_t> counts;
  if (seg.length() < n) return counts;
  for (std::size_t i = 0; i + n <= seg.length(); ++i) {
    std::string key = seg[i].norm;
    for (std::size_t k = 1; k < n; ++k) {
      key += ' ';
      key += seg[i + k].norm;
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace

std::vector<double> BleuParams::resolved_weights() const {
  if (!weights.empty()) return weights;
  return std::vector<double>(max_n, max_n ? 1.0 / static_cast<double>(max_n) : 0.0);
}

void BleuParams::validate() const {
  if (max_n < 1) throw ConfigError("BLEU max-n must be >= 1");
  if (!weights.empty()) {
    if (weights.size() != max_n)
      throw ConfigError("BLEU weights: expected " + std::to_string(max_n) + " values, got " +
                        std::to_string(weights.size()));
    double sum = 0.0;
    for (double w : weights) {
      if (!(w >= 0.0)) throw ConfigError("BLEU weights must be non-negative");
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw ConfigError("BLEU weights must sum to 1");
  }
  if (smoothing == Smoothing::add_k && !(k > 0.0)) throw ConfigError("BLEU add-k smoothing needs k > 0");
}

void MeteorParams::validate() const {
  if (!(gamma > 0.0 && gamma < 1.0)) throw ConfigError("METEOR gamma must lie in (0, 1)");
  if (!(x1 >= 0.0 && x1 <= 1.0)) throw ConfigError("METEOR x1 must lie in [0, 1]");
  if (!(x2 > 0.0)) throw ConfigError("METEOR x2 must be > 0");
}

std::vector<double> ngram_precisions(const Segment& hyp, const Segment& ref, const BleuParams& params) {
  std::vector<double> out;
  out.reserve(params.max_n);
  for (std::size_t n = 1; n <= params.max_n; ++n) {
    const auto hyp_counts = count_ngrams(hyp, n);
    const auto ref_counts = count_ngrams(ref, n);
    double matched = 0.0;
    for (const auto& [gram, count] : hyp_counts) {
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) matched += static_cast<double>(std::min(count, it->second));
    }
    double total = hyp.length() >= n ? static_cast<double>(hyp.length() - n + 1) : 0.0;
    if (params.smoothing == Smoothing::add_k && n >= 2) {
      matched += params.k;
      total += params.k;
    }
    out.push_back(total > 0.0 ? matched / total : 0.0);
  }
  return out;
}

double brevity_penalty(std::size_t hyp_length, std::size_t ref_length) {
  if (hyp_length == 0) return 0.0;
  if (hyp_length > ref_length) return 1.0;
  return std::exp(1.0 - static_cast<double>(ref_length) / static_cast<double>(hyp_length));
}

BleuResult bleu(const Segment& hyp, const Segment& ref, const BleuParams& params) {
  require_reference(ref);
  BleuResult r;
  r.precisions = ngram_precisions(hyp, ref, params);
  r.brevity_penalty = brevity_penalty(hyp.length(), ref.length());
  const auto w = params.resolved_weights();
  double log_sum = 0.0;
  for (std::size_t n = 0; n < r.precisions.size(); ++n) {
    if (r.precisions[n] == 0.0) {
      r.score = 0.0;
      return r;
    }
    log_sum += w[n] * std::log(r.precisions[n]);
  }
  r.score = r.brevity_penalty * std::exp(log_sum);
  return r;
}

BleuEntResult bleu_ent(const Segment& hyp, const Segment& ref, const BleuParams& bleu_params,
                       const EntParams& ent_params, const Alignment& alignment) {
  if (ent_params.apply_length_penalty)
    throw ConfigError("BLEU+ENT takes alpha^-H; the ENT length penalty must be disabled");
  BleuEntResult r;
  r.bleu = bleu(hyp, ref, bleu_params);
  r.profile = extract_chunks(alignment);
  r.ent_factor = ent_score(r.profile, hyp.length(), ref.length(), ent_params);
  r.score = r.bleu.score * r.ent_factor;
  return r;
}

BleuEntResult bleu_ent(const Segment& hyp, const Segment& ref, const BleuParams& bleu_params,
                       const EntParams& ent_params, const std::vector<MatcherStage>& stages) {
  return bleu_ent(hyp, ref, bleu_params, ent_params, align(hyp, ref, stages));
}

Fmean fmean(std::size_t matched, std::size_t hyp_length, std::size_t ref_length, double gamma) {
  Fmean f;
  if (matched == 0) return f;
  f.precision = static_cast<double>(matched) / static_cast<double>(hyp_length);
  f.recall = static_cast<double>(matched) / static_cast<double>(ref_length);
  f.value = f.precision * f.recall / ((1.0 - gamma) * f.recall + gamma * f.precision);
  return f;
}

MeteorResult meteor_lite(const Segment& hyp, const Segment& ref, const MeteorParams& params,
                         const Alignment& alignment) {
  require_reference(ref);
  MeteorResult r;
  const ChunkProfile profile = extract_chunks(alignment);
  r.matched = profile.total_matched;
  r.chunks = profile.count();
  r.fmean = fmean(r.matched, hyp.length(), ref.length(), params.gamma);
  if (r.matched == 0) return r;
  r.penalty = params.x1 * std::pow(static_cast<double>(r.chunks) / static_cast<double>(r.matched), params.x2);
  r.score = r.fmean.value * (1.0 - r.penalty);
  return r;
}

MeteorResult meteor_lite(const Segment& hyp, const Segment& ref, const MeteorParams& params,
                         const std::vector<MatcherStage>& stages) {
  return meteor_lite(hyp, ref, params, align(hyp, ref, stages));
}

MeteorEntResult meteor_ent(const Segment& hyp, const Segment& ref, const MeteorParams& meteor_params,
                           const EntParams& ent_params, const Alignment& alignment) {
  require_reference(ref);
  if (!ent_params.apply_length_penalty)
    throw ConfigError("METEOR+ENT takes alpha^(-H*LP); the ENT length penalty must be enabled");
  MeteorEntResult r;
  r.profile = extract_chunks(alignment);
  r.fmean = fmean(r.profile.total_matched, hyp.length(), ref.length(), meteor_params.gamma);
  r.length_penalty = length_penalty(hyp.length(), ref.length(), ent_params.beta);
  r.ent_factor = ent_score(r.profile, hyp.length(), ref.length(), ent_params);
  r.score = r.fmean.value * r.ent_factor;
  return r;
}

MeteorEntResult meteor_ent(const Segment& hyp, const Segment& ref, const MeteorParams& meteor_params,
                           const EntParams& ent_params, const std::vector<MatcherStage>& stages) {
  return meteor_ent(hyp, ref, meteor_params, ent_params, align(hyp, ref, stages));
}

EntResult ent(const Segment& hyp, const Segment& ref, const EntParams& params, const Alignment& alignment) {
  require_reference(ref);
  EntResult r;
  r.profile = extract_chunks(alignment);
  r.length_penalty = params.apply_length_penalty ? length_penalty(hyp.length(), ref.length(), params.beta) : 1.0;
  r.score = ent_score(r.profile, hyp.length(), ref.length(), params);
  return r;
}

std::string_view to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::bleu: return "bleu";
    case MetricKind::bleu_ent: return "bleu-ent";
    case MetricKind::meteor_lite: return "meteor-lite";
    case MetricKind::meteor_ent: return "meteor-ent";
    case MetricKind::ent: return "ent";
  }
  return "unknown";
}

MetricKind parse_metric_kind(std::string_view name) {
  for (auto k : {MetricKind::bleu, MetricKind::bleu_ent, MetricKind::meteor_lite, MetricKind::meteor_ent,
                 MetricKind::ent}) {
    if (to_string(k) == name) return k;
  }
  throw ConfigError("unknown metric '" + std::string(name) + "'");
}

MetricConfig MetricConfig::defaults(MetricKind kind) {
  MetricConfig m;
  m.kind = kind;
  m.ent = kind == MetricKind::bleu_ent ? EntParams::for_bleu()
          : kind == MetricKind::meteor_ent ? EntParams::for_meteor()
                                           : EntParams::standalone();
  return m;
}

void MetricConfig::validate() const {
  switch (kind) {
    case MetricKind::bleu: bleu.validate(); break;
    case MetricKind::bleu_ent:
      bleu.validate();
      ent.validate();
      if (ent.apply_length_penalty) throw ConfigError("bleu-ent must not apply the ENT length penalty");
      break;
    case MetricKind::meteor_lite: meteor.validate(); break;
    case MetricKind::meteor_ent:
      meteor.validate();
      ent.validate();
      if (!ent.apply_length_penalty) throw ConfigError("meteor-ent must apply the ENT length penalty");
      break;
    case MetricKind::ent: ent.validate(); break;
  }
}

void ScoringConfig::validate() const {
  if (metrics.empty()) throw ConfigError("no metrics configured");
  for (const auto& m : metrics) m.validate();
  validate_stages(stages);
}

SegmentScore score_segment(const Segment& hyp, const Segment& ref, const MetricConfig& metric,
                           const Alignment& alignment) {
  SegmentScore s;
  auto& c = s.components;
  c.hyp_length = hyp.length();
  c.ref_length = ref.length();
  switch (metric.kind) {
    case MetricKind::bleu: {
      auto r = bleu(hyp, ref, metric.bleu);
      s.score = r.score;
      c.precisions = std::move(r.precisions);
      c.brevity_penalty = r.brevity_penalty;
      break;
    }
    case MetricKind::bleu_ent: {
      auto r = bleu_ent(hyp, ref, metric.bleu, metric.ent, alignment);
      s.score = r.score;
      c.precisions = std::move(r.bleu.precisions);
      c.brevity_penalty = r.bleu.brevity_penalty;
      c.chunk_lengths = r.profile.lengths();
      c.matched = r.profile.total_matched;
      c.entropy = r.profile.entropy;
      c.ent_factor = r.ent_factor;
      break;
    }
    case MetricKind::meteor_lite: {
      auto r = meteor_lite(hyp, ref, metric.meteor, alignment);
      s.score = r.score;
      c.chunk_lengths = extract_chunks(alignment).lengths();
      c.matched = r.matched;
      c.precision = r.fmean.precision;
      c.recall = r.fmean.recall;
      c.fmean = r.fmean.value;
      c.penalty = r.penalty;
      break;
    }
    case MetricKind::meteor_ent: {
      auto r = meteor_ent(hyp, ref, metric.meteor, metric.ent, alignment);
      s.score = r.score;
      c.chunk_lengths = r.profile.lengths();
      c.matched = r.profile.total_matched;
      c.entropy = r.profile.entropy;
      c.length_penalty = r.length_penalty;
      c.ent_factor = r.ent_factor;
      c.precision = r.fmean.precision;
      c.recall = r.fmean.recall;
      c.fmean = r.fmean.value;
      break;
    }
    case MetricKind::ent: {
      auto r = ent(hyp, ref, metric.ent, alignment);
      s.score = r.score;
      c.chunk_lengths = r.profile.lengths();
      c.matched = r.profile.total_matched;
      c.entropy = r.profile.entropy;
      c.length_penalty = r.length_penalty;
      break;
    }
  }
  return s;
}

}  // namespace entmt
