#include "entmt/resources.hpp"

#include <algorithm>
#include <sstream>

#include "entmt/error.hpp"
#include "entmt/text.hpp"

namespace entmt {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(normalize(w));
  return out;
}

std::string where(const std::filesystem::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line);
}

std::vector<std::string> resource_lines(const std::filesystem::path& path) {
  try {
    return read_lines(path);
  } catch (const DataError& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

StemRules::StemRules(std::vector<std::pair<std::string, std::string>> rules)
    : rules_(std::move(rules)) {
  for (const auto& [suffix, repl] : rules_)
    if (suffix.empty()) throw ConfigError("stem rule with empty suffix");
  std::stable_sort(rules_.begin(), rules_.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first < b.first;
  });
}

StemRules StemRules::load(const std::filesystem::path& path) {
  std::vector<std::pair<std::string, std::string>> rules;
  const auto lines = resource_lines(path);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::string line = trim(lines[n]);
    if (line.empty() || line[0] == '#') continue;
    const auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw ConfigError(where(path, n + 1) + ": expected 'suffix -> replacement'");
    std::string suffix = normalize(trim(std::string_view(line).substr(0, arrow)));
    std::string repl = normalize(trim(std::string_view(line).substr(arrow + 2)));
    if (suffix.empty()) throw ConfigError(where(path, n + 1) + ": empty suffix");
    rules.emplace_back(std::move(suffix), std::move(repl));
  }
  return StemRules(std::move(rules));
}

std::string StemRules::stem(std::string_view word) const {
  for (const auto& [suffix, repl] : rules_) {
    if (word.size() > suffix.size() && word.ends_with(suffix)) {
      std::string out(word.substr(0, word.size() - suffix.size()));
      out += repl;
      return out;
    }
  }
  return std::string(word);
}

void SynonymLexicon::add_class(const std::vector<std::string>& words) {
  const std::size_t id = classes_++;
  for (const auto& w : words) {
    auto& ids = word_classes_[normalize(w)];
    if (ids.empty() || ids.back() != id) ids.push_back(id);
  }
}

SynonymLexicon SynonymLexicon::load(const std::filesystem::path& path) {
  SynonymLexicon lex;
  for (const auto& line : resource_lines(path)) {
    auto words = split_words(line);
    if (words.empty() || words[0].starts_with('#')) continue;
    lex.add_class(words);
  }
  return lex;
}

bool SynonymLexicon::synonymous(std::string_view a, std::string_view b) const {
  auto ia = word_classes_.find(a);
  auto ib = word_classes_.find(b);
  if (ia == word_classes_.end() || ib == word_classes_.end()) return false;
  // Class id lists are sorted ascending by construction.
  const auto& x = ia->second;
  const auto& y = ib->second;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] == y[j]) return true;
    x[i] < y[j] ? ++i : ++j;
  }
  return false;
}

void ParaphraseTable::add(Phrase source, Phrase target) {
  if (source.empty() || target.empty())
    throw ConfigError("paraphrase entry with an empty side");
  if (source.size() == 1 && target.size() == 1) {
    single_.emplace(source[0], target[0]);
  } else {
    ++multiword_;
  }
  entries_[std::move(source)].insert(std::move(target));
}

ParaphraseTable ParaphraseTable::load(const std::filesystem::path& path) {
  ParaphraseTable table;
  const auto lines = resource_lines(path);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::string line = trim(lines[n]);
    if (line.empty() || line[0] == '#') continue;
    const auto sep = line.find("|||");
    if (sep == std::string::npos)
      throw ConfigError(where(path, n + 1) + ": expected 'source ||| target'");
    auto source = split_words(std::string_view(line).substr(0, sep));
    auto target = split_words(std::string_view(line).substr(sep + 3));
    if (source.empty() || target.empty())
      throw ConfigError(where(path, n + 1) + ": paraphrase entry with an empty side");
    table.add(std::move(source), std::move(target));
  }
  return table;
}

bool ParaphraseTable::paraphrase(std::string_view a, std::string_view b) const {
  return single_.contains(std::pair<std::string, std::string>(a, b)) ||
         single_.contains(std::pair<std::string, std::string>(b, a));
}

}  // namespace entmt
