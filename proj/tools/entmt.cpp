// entmt: score MT output with BLEU, METEOR-style and entropy-based fluency
// metrics, optionally correlating them with human rankings.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "entmt/error.hpp"
#include "entmt/run.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy-based MT evaluation: BLEU, METEOR-lite, ENT and their combinations"};

  entmt::RunConfig config;
  std::string ref;
  std::vector<std::string> hyps;
  std::string stages = "exact";
  std::string weights;
  std::string synonyms, paraphrases, stem_rules, judgments, out;
  double alpha = 0.0, beta = 0.0;
  bool no_timestamp = false;

  app.add_option("--ref", ref, "Reference file, one segment per line")->required();
  app.add_option("--hyp", hyps, "System output as NAME=PATH (repeatable)")->required();
  app.add_option("--metric", config.metrics, "bleu, bleu-ent, meteor-lite, meteor-ent or ent (repeatable)");
  app.add_option("--stages", stages, "Comma-separated matcher stages: exact,stem,synonym,paraphrase")
      ->capture_default_str();
  app.add_option("--synonyms", synonyms, "Synonym lexicon (one class per line)");
  app.add_option("--paraphrases", paraphrases, "Paraphrase table ('source ||| target')");
  app.add_option("--stem-rules", stem_rules, "Stem rules ('suffix -> replacement')");
  app.add_option("--judgments", judgments, "Human ranking TSV: segment, judge, system, rank");
  auto* alpha_opt = app.add_option("--alpha", alpha, "ENT base alpha for all ENT metrics");
  auto* beta_opt = app.add_option("--beta", beta, "ENT length-penalty base beta");
  app.add_option("--max-n", config.max_n, "BLEU maximum n-gram order")->capture_default_str();
  app.add_option("--weights", weights, "Comma-separated BLEU weights (default uniform)");
  app.add_option("--smoothing", config.smoothing, "BLEU smoothing: add-k or none")->capture_default_str();
  app.add_option("--k", config.k, "Add-k smoothing constant")->capture_default_str();
  app.add_option("--gamma", config.gamma, "METEOR Fmean recall weight")->capture_default_str();
  app.add_option("--x1", config.x1, "METEOR fragmentation penalty scale")->capture_default_str();
  app.add_option("--x2", config.x2, "METEOR fragmentation penalty exponent")->capture_default_str();
  app.add_option("--out", out, "Write the JSON report here instead of stdout");
  app.add_flag("--no-timestamp", no_timestamp, "Leave generated_at null for reproducible output");
  app.add_flag("--serial", config.serial, "Use the single-threaded scoring path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    config.reference = ref;
    for (const auto& h : hyps) {
      auto eq = h.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == h.size())
        throw entmt::ConfigError("--hyp expects NAME=PATH, got '" + h + "'");
      config.hypotheses.push_back({h.substr(0, eq), h.substr(eq + 1)});
    }
    config.stages = split_commas(stages);
    for (const auto& w : split_commas(weights)) {
      try {
        config.weights.push_back(std::stod(w));
      } catch (const std::exception&) {
        throw entmt::ConfigError("bad --weights value '" + w + "'");
      }
    }
    if (!synonyms.empty()) config.synonyms = synonyms;
    if (!paraphrases.empty()) config.paraphrases = paraphrases;
    if (!stem_rules.empty()) config.stem_rules = stem_rules;
    if (!judgments.empty()) config.judgments = judgments;
    if (!out.empty()) config.output = out;
    if (*alpha_opt) config.alpha = alpha;
    if (*beta_opt) config.beta = beta;
    config.timestamp = !no_timestamp;

    const auto report = entmt::run(config);
    for (const auto& w : report["warnings"]) std::cerr << "warning: " << w.get<std::string>() << '\n';
    if (!config.output) std::cout << report.dump(2) << '\n';
  } catch (const entmt::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const entmt::DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
