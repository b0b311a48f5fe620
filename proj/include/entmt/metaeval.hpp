#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "entmt/metrics.hpp"

namespace entmt {

struct SystemRank {
  std::string system;
  int rank = 0;  // smaller is better; ties allowed
};

struct RankingJudgment {
  std::size_t segment = 0;
  std::string judge;
  std::vector<SystemRank> ranks;
};

struct PreferencePair {
  std::size_t segment = 0;
  std::string better;
  std::string worse;

  auto operator<=>(const PreferencePair&) const = default;
};

struct TauResult {
  double tau = 0.0;  // 0 when there are no pairs
  std::size_t concordant = 0;
  std::size_t discordant = 0;
  std::size_t total = 0;
};

// Metric score keyed by (segment, system).
using SegmentScores = std::map<std::pair<std::size_t, std::string>, double, std::less<>>;

// Reads "segment\tjudge\tsystem\trank" TSV (header required). Rows sharing a
// (segment, judge) key form one judgment, in order of first appearance.
std::vector<RankingJudgment> load_judgments(const std::filesystem::path& path);

// Every system pair with unequal human ranks, better system first. Human
// ties yield no pair. When known_systems is given, ranks naming any other
// system raise JudgmentFormatError.
std::vector<PreferencePair> extract_pairs(const std::vector<RankingJudgment>& judgments,
                                          const std::optional<std::set<std::string>>& known_systems = std::nullopt);

// tau = (concordant - discordant) / total. Metric ties count only in the
// total. Throws CoverageError naming the first pair whose score is missing.
// Counting runs in parallel with OpenMP; see kendall_tau_serial.
TauResult kendall_tau(const std::vector<PreferencePair>& pairs, const SegmentScores& scores);
TauResult kendall_tau_serial(const std::vector<PreferencePair>& pairs, const SegmentScores& scores);

SegmentScores scores_from_reports(const std::vector<MetricReport>& reports, const std::string& metric);

}  // namespace entmt
