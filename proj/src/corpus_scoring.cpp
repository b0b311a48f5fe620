#include <exception>
#include <string>

#include "entmt/error.hpp"
#include "entmt/metrics.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace entmt {

namespace {

bool needs_alignment(const ScoringConfig& config) {
  for (const auto& m : config.metrics)
    if (m.kind != MetricKind::bleu) return true;
  return false;
}

std::vector<MetricReport> empty_reports(const ParallelCorpus& corpus, const ScoringConfig& config) {
  std::vector<MetricReport> reports;
  for (const auto& m : config.metrics) {
    for (const auto& sys : corpus.system_ids) {
      MetricReport r;
      r.metric = std::string(to_string(m.kind));
      r.system = sys;
      r.segments.resize(corpus.size());
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

// Scores segment `seg` of system `sys` for every metric.
void score_cell(const ParallelCorpus& corpus, const ScoringConfig& config, bool aligned, std::size_t sys,
                std::size_t seg, std::vector<MetricReport>& reports) {
  const Segment& hyp = corpus.hypotheses[sys][seg];
  const Segment& ref = corpus.references[seg];
  const std::string context = "segment " + std::to_string(seg) + ", system '" + corpus.system_ids[sys] + "'";
  try {
    if (ref.empty()) throw DegenerateReferenceError("empty reference segment");
    Alignment alignment;
    if (aligned) alignment = align(hyp, ref, config.stages, config.align_options);
    const std::size_t systems = corpus.system_ids.size();
    for (std::size_t m = 0; m < config.metrics.size(); ++m)
      reports[m * systems + sys].segments[seg] = score_segment(hyp, ref, config.metrics[m], alignment);
  } catch (const DegenerateReferenceError& e) {
    throw DegenerateReferenceError(context + ": " + e.what());
  } catch (const DataError& e) {
    throw DataError(context + ": " + e.what());
  }
}

void finish(std::vector<MetricReport>& reports) {
  for (auto& r : reports) {
    double sum = 0.0;
    for (const auto& s : r.segments) sum += s.score;
    r.corpus_score = r.segments.empty() ? 0.0 : sum / static_cast<double>(r.segments.size());
  }
}

}  // namespace

std::vector<MetricReport> score_corpus_serial(const ParallelCorpus& corpus, const ScoringConfig& config) {
  config.validate();
  auto reports = empty_reports(corpus, config);
  const bool aligned = needs_alignment(config);
  for (std::size_t sys = 0; sys < corpus.system_ids.size(); ++sys)
    for (std::size_t seg = 0; seg < corpus.size(); ++seg) score_cell(corpus, config, aligned, sys, seg, reports);
  finish(reports);
  return reports;
}

std::vector<MetricReport> score_corpus(const ParallelCorpus& corpus, const ScoringConfig& config) {
  config.validate();
  auto reports = empty_reports(corpus, config);
  const bool aligned = needs_alignment(config);
  const std::size_t segments = corpus.size();
  const auto cells = static_cast<long long>(corpus.system_ids.size() * segments);
  // Exceptions cannot cross the parallel region; keep one per cell and
  // rethrow the first in serial order.
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(cells));

#pragma omp parallel for schedule(dynamic, 8)
  for (long long cell = 0; cell < cells; ++cell) {
    const auto c = static_cast<std::size_t>(cell);
    try {
      score_cell(corpus, config, aligned, c / segments, c % segments, reports);
    } catch (...) {
      errors[c] = std::current_exception();
    }
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  finish(reports);
  return reports;
}

}  // namespace entmt
