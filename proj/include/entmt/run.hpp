#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "entmt/metaeval.hpp"
#include "entmt/metrics.hpp"
#include "entmt/text.hpp"

namespace entmt {

struct RunConfig {
  std::filesystem::path reference;
  std::vector<HypothesisFile> hypotheses;
  std::vector<std::string> metrics;
  std::vector<std::string> stages = {"exact"};
  std::optional<std::filesystem::path> synonyms;
  std::optional<std::filesystem::path> paraphrases;
  std::optional<std::filesystem::path> stem_rules;
  std::optional<std::filesystem::path> judgments;
  std::optional<std::filesystem::path> output;

  // Overrides for every ENT-bearing metric; unset keeps per-metric defaults.
  std::optional<double> alpha;
  std::optional<double> beta;

  std::size_t max_n = 4;
  std::vector<double> weights;
  std::string smoothing = "add-k";
  double k = 1.0;
  double gamma = 0.9;
  double x1 = 0.5;
  double x2 = 3.0;

  bool timestamp = true;
  bool serial = false;  // use the single-threaded scoring path
};

// Loads resources and resolves per-metric parameters. Throws ConfigError.
ScoringConfig resolve_scoring(const RunConfig& config, std::vector<std::string>* warnings = nullptr);

struct ScoreRun {
  ParallelCorpus corpus;
  ScoringConfig scoring;
  std::vector<MetricReport> reports;
  nlohmann::json report;
};

// Scores the corpus and builds the JSON report (without metaeval).
ScoreRun run_score(const RunConfig& config);

// Kendall tau of every configured metric against the judgment file; the
// result is also stored under "metaeval" in run.report.
nlohmann::json run_metaeval(const RunConfig& config, ScoreRun& run);

// run_score, then run_metaeval when judgments are configured; writes the
// report to config.output when set.
nlohmann::json run(const RunConfig& config);

nlohmann::json to_json(const ScoreComponents& components);
nlohmann::json to_json(const MetricConfig& metric);
nlohmann::json to_json(const TauResult& tau);

}  // namespace entmt
