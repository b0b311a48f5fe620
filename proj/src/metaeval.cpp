#include "entmt/metaeval.hpp"

#include <charconv>
#include <string_view>

#include "entmt/error.hpp"
#include "entmt/text.hpp"

namespace entmt {

namespace {

constexpr std::string_view kHeader = "segment\tjudge\tsystem\trank";

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

double lookup(const SegmentScores& scores, std::size_t segment, const std::string& system) {
  auto it = scores.find(std::make_pair(segment, system));
  if (it == scores.end())
    throw CoverageError("no metric score for segment " + std::to_string(segment) + ", system '" + system + "'");
  return it->second;
}

void check_coverage(const std::vector<PreferencePair>& pairs, const SegmentScores& scores) {
  for (const auto& p : pairs) {
    lookup(scores, p.segment, p.better);
    lookup(scores, p.segment, p.worse);
  }
}

TauResult make_result(std::size_t concordant, std::size_t discordant, std::size_t total) {
  TauResult r{0.0, concordant, discordant, total};
  if (total > 0)
    r.tau = (static_cast<double>(concordant) - static_cast<double>(discordant)) / static_cast<double>(total);
  return r;
}

}  // namespace

std::vector<RankingJudgment> load_judgments(const std::filesystem::path& path) {
  const auto lines = read_lines(path);
  auto fail = [&](std::size_t line, const std::string& what) {
    throw JudgmentFormatError(path.string() + ":" + std::to_string(line) + ": " + what);
  };
  if (lines.empty() || lines[0] != kHeader) fail(1, "expected header 'segment<TAB>judge<TAB>system<TAB>rank'");

  std::vector<RankingJudgment> judgments;
  std::map<std::pair<std::size_t, std::string>, std::size_t> index;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    if (lines[n].empty()) continue;
    const auto fields = split_tabs(lines[n]);
    if (fields.size() != 4) fail(n + 1, "expected 4 tab-separated fields");
    std::size_t segment = 0;
    int rank = 0;
    if (!parse_number(fields[0], segment)) fail(n + 1, "bad segment index '" + std::string(fields[0]) + "'");
    if (fields[2].empty()) fail(n + 1, "empty system id");
    if (!parse_number(fields[3], rank) || rank < 1) fail(n + 1, "rank must be a positive integer");

    auto key = std::make_pair(segment, std::string(fields[1]));
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, judgments.size()).first;
      judgments.push_back({segment, std::string(fields[1]), {}});
    }
    auto& j = judgments[it->second];
    for (const auto& r : j.ranks)
      if (r.system == fields[2]) fail(n + 1, "system '" + std::string(fields[2]) + "' ranked twice");
    j.ranks.push_back({std::string(fields[2]), rank});
  }
  for (const auto& j : judgments) {
    if (j.ranks.size() < 2)
      throw JudgmentFormatError(path.string() + ": judgment for segment " + std::to_string(j.segment) +
                                " (judge '" + j.judge + "') ranks fewer than 2 systems");
  }
  return judgments;
}

std::vector<PreferencePair> extract_pairs(const std::vector<RankingJudgment>& judgments,
                                          const std::optional<std::set<std::string>>& known_systems) {
  std::vector<PreferencePair> pairs;
  for (const auto& j : judgments) {
    if (known_systems) {
      for (const auto& r : j.ranks)
        if (!known_systems->contains(r.system))
          throw JudgmentFormatError("judgment for segment " + std::to_string(j.segment) +
                                    " ranks unknown system '" + r.system + "'");
    }
    for (std::size_t a = 0; a < j.ranks.size(); ++a) {
      for (std::size_t b = a + 1; b < j.ranks.size(); ++b) {
        const auto& x = j.ranks[a];
        const auto& y = j.ranks[b];
        if (x.rank == y.rank) continue;
        if (x.rank < y.rank)
          pairs.push_back({j.segment, x.system, y.system});
        else
          pairs.push_back({j.segment, y.system, x.system});
      }
    }
  }
  return pairs;
}

TauResult kendall_tau_serial(const std::vector<PreferencePair>& pairs, const SegmentScores& scores) {
  check_coverage(pairs, scores);
  std::size_t con = 0, dis = 0;
  for (const auto& p : pairs) {
    const double better = lookup(scores, p.segment, p.better);
    const double worse = lookup(scores, p.segment, p.worse);
    if (better > worse)
      ++con;
    else if (better < worse)
      ++dis;
  }
  return make_result(con, dis, pairs.size());
}

TauResult kendall_tau(const std::vector<PreferencePair>& pairs, const SegmentScores& scores) {
  check_coverage(pairs, scores);
  const auto n = static_cast<long long>(pairs.size());
  long long con = 0, dis = 0;
#pragma omp parallel for reduction(+ : con, dis)
  for (long long k = 0; k < n; ++k) {
    const auto& p = pairs[static_cast<std::size_t>(k)];
    const double better = scores.find(std::make_pair(p.segment, p.better))->second;
    const double worse = scores.find(std::make_pair(p.segment, p.worse))->second;
    con += better > worse;
    dis += better < worse;
  }
  return make_result(static_cast<std::size_t>(con), static_cast<std::size_t>(dis), pairs.size());
}

SegmentScores scores_from_reports(const std::vector<MetricReport>& reports, const std::string& metric) {
  SegmentScores out;
  for (const auto& r : reports) {
    if (r.metric != metric) continue;
    for (std::size_t i = 0; i < r.segments.size(); ++i) out[{i, r.system}] = r.segments[i].score;
  }
  return out;
}

}  // namespace entmt
