#include "entmt/run.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <memory>

#include "entmt/error.hpp"

namespace entmt {

using nlohmann::json;

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::filesystem::path require_resource(const std::optional<std::filesystem::path>& path, std::string_view stage,
                                       std::string_view flag) {
  if (!path) throw ConfigError("stage '" + std::string(stage) + "' needs " + std::string(flag));
  if (!std::filesystem::exists(*path))
    throw ConfigError("resource file '" + path->string() + "' does not exist");
  return *path;
}

json echo_config(const RunConfig& c) {
  json hyps = json::array();
  for (const auto& h : c.hypotheses) hyps.push_back({{"system", h.system_id}, {"path", h.path.string()}});
  auto opt_path = [](const std::optional<std::filesystem::path>& p) -> json {
    return p ? json(p->string()) : json(nullptr);
  };
  return {
      {"reference", c.reference.string()},
      {"hypotheses", hyps},
      {"metrics", c.metrics},
      {"stages", c.stages},
      {"synonyms", opt_path(c.synonyms)},
      {"paraphrases", opt_path(c.paraphrases)},
      {"stem_rules", opt_path(c.stem_rules)},
      {"judgments", opt_path(c.judgments)},
  };
}

}  // namespace

json to_json(const ScoreComponents& c) {
  json j = {{"hyp_length", c.hyp_length}, {"ref_length", c.ref_length}};
  if (c.precisions) j["precisions"] = *c.precisions;
  if (c.brevity_penalty) j["brevity_penalty"] = *c.brevity_penalty;
  if (c.chunk_lengths) j["chunk_lengths"] = *c.chunk_lengths;
  if (c.matched) j["matched"] = *c.matched;
  if (c.entropy) j["entropy"] = *c.entropy;
  if (c.length_penalty) j["length_penalty"] = *c.length_penalty;
  if (c.ent_factor) j["ent_factor"] = *c.ent_factor;
  if (c.precision) j["precision"] = *c.precision;
  if (c.recall) j["recall"] = *c.recall;
  if (c.fmean) j["fmean"] = *c.fmean;
  if (c.penalty) j["penalty"] = *c.penalty;
  return j;
}

json to_json(const MetricConfig& m) {
  json j = {{"metric", to_string(m.kind)}};
  const bool uses_bleu = m.kind == MetricKind::bleu || m.kind == MetricKind::bleu_ent;
  const bool uses_meteor = m.kind == MetricKind::meteor_lite || m.kind == MetricKind::meteor_ent;
  const bool uses_ent = m.kind == MetricKind::bleu_ent || m.kind == MetricKind::meteor_ent || m.kind == MetricKind::ent;
  if (uses_bleu) {
    j["max_n"] = m.bleu.max_n;
    j["weights"] = m.bleu.resolved_weights();
    j["smoothing"] = m.bleu.smoothing == Smoothing::add_k ? "add-k" : "none";
    if (m.bleu.smoothing == Smoothing::add_k) j["k"] = m.bleu.k;
  }
  if (uses_meteor) {
    j["gamma"] = m.meteor.gamma;
    if (m.kind == MetricKind::meteor_lite) {
      j["x1"] = m.meteor.x1;
      j["x2"] = m.meteor.x2;
    }
  }
  if (uses_ent) {
    j["alpha"] = m.ent.alpha;
    j["length_penalty"] = m.ent.apply_length_penalty;
    if (m.ent.apply_length_penalty) j["beta"] = m.ent.beta;
  }
  return j;
}

json to_json(const TauResult& t) {
  return {{"tau", t.tau}, {"concordant", t.concordant}, {"discordant", t.discordant}, {"total", t.total}};
}

ScoringConfig resolve_scoring(const RunConfig& config, std::vector<std::string>* warnings) {
  if (config.metrics.empty()) throw ConfigError("at least one --metric is required");
  if (config.hypotheses.empty()) throw ConfigError("at least one --hyp is required");

  Smoothing smoothing;
  if (config.smoothing == "add-k")
    smoothing = Smoothing::add_k;
  else if (config.smoothing == "none")
    smoothing = Smoothing::none;
  else
    throw ConfigError("unknown smoothing '" + config.smoothing + "' (expected add-k or none)");

  ScoringConfig scoring;
  for (const auto& name : config.metrics) {
    MetricConfig m = MetricConfig::defaults(parse_metric_kind(name));
    m.bleu.max_n = config.max_n;
    m.bleu.weights = config.weights;
    m.bleu.smoothing = smoothing;
    m.bleu.k = config.k;
    m.meteor.gamma = config.gamma;
    m.meteor.x1 = config.x1;
    m.meteor.x2 = config.x2;
    if (config.alpha) m.ent.alpha = *config.alpha;
    if (config.beta) m.ent.beta = *config.beta;
    scoring.metrics.push_back(m);
  }

  scoring.stages.clear();
  for (const auto& name : config.stages) {
    switch (parse_stage_kind(name)) {
      case StageKind::exact: scoring.stages.push_back(MatcherStage::exact()); break;
      case StageKind::stem:
        scoring.stages.push_back(MatcherStage::stem(
            std::make_shared<StemRules>(StemRules::load(require_resource(config.stem_rules, name, "--stem-rules")))));
        break;
      case StageKind::synonym:
        scoring.stages.push_back(MatcherStage::synonym(std::make_shared<SynonymLexicon>(
            SynonymLexicon::load(require_resource(config.synonyms, name, "--synonyms")))));
        break;
      case StageKind::paraphrase: {
        auto table = std::make_shared<ParaphraseTable>(
            ParaphraseTable::load(require_resource(config.paraphrases, name, "--paraphrases")));
        if (table->multiword_entries() > 0 && warnings) {
          warnings->push_back(std::to_string(table->multiword_entries()) +
                              " multi-word paraphrase entries ignored (single-word matching only)");
        }
        scoring.stages.push_back(MatcherStage::paraphrase(std::move(table)));
        break;
      }
    }
  }
  scoring.validate();
  return scoring;
}

ScoreRun run_score(const RunConfig& config) {
  ScoreRun run;
  std::vector<std::string> warnings;
  run.scoring = resolve_scoring(config, &warnings);
  run.corpus = load_corpus(config.reference, config.hypotheses);
  run.reports = config.serial ? score_corpus_serial(run.corpus, run.scoring) : score_corpus(run.corpus, run.scoring);

  json metrics = json::array();
  const std::size_t systems = run.corpus.system_ids.size();
  for (std::size_t m = 0; m < run.scoring.metrics.size(); ++m) {
    json per_system = json::array();
    for (std::size_t s = 0; s < systems; ++s) {
      const MetricReport& r = run.reports[m * systems + s];
      json segs = json::array();
      for (std::size_t i = 0; i < r.segments.size(); ++i) {
        segs.push_back({{"index", i}, {"score", r.segments[i].score}, {"components", to_json(r.segments[i].components)}});
      }
      per_system.push_back({{"system", r.system}, {"corpus_score", r.corpus_score}, {"segments", segs}});
    }
    metrics.push_back({{"metric", to_string(run.scoring.metrics[m].kind)},
                       {"params", to_json(run.scoring.metrics[m])},
                       {"systems", per_system}});
  }

  run.report = {
      {"tool", "entmt"},
      {"generated_at", config.timestamp ? json(utc_timestamp()) : json(nullptr)},
      {"config", echo_config(config)},
      {"warnings", warnings},
      {"segments", run.corpus.size()},
      {"systems", run.corpus.system_ids},
      {"metrics", metrics},
  };
  return run;
}

json run_metaeval(const RunConfig& config, ScoreRun& run) {
  if (!config.judgments) throw ConfigError("metaeval requires --judgments");
  const auto judgments = load_judgments(*config.judgments);
  const auto pairs = extract_pairs(judgments);

  json results = json::array();
  for (const auto& m : run.scoring.metrics) {
    const std::string name(to_string(m.kind));
    const auto scores = scores_from_reports(run.reports, name);
    json entry = to_json(config.serial ? kendall_tau_serial(pairs, scores) : kendall_tau(pairs, scores));
    entry["metric"] = name;
    results.push_back(entry);
  }
  json out = {{"judgments", judgments.size()}, {"pairs", pairs.size()}, {"results", results}};
  run.report["metaeval"] = out;
  return out;
}

json run(const RunConfig& config) {
  ScoreRun r = run_score(config);
  if (config.judgments) run_metaeval(config, r);
  if (config.output) {
    std::ofstream out(*config.output, std::ios::binary);
    if (!out) throw ConfigError("cannot write report to '" + config.output->string() + "'");
    out << r.report.dump(2) << '\n';
  }
  return r.report;
}

}  // namespace entmt
