#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace entmt {

// Data-driven suffix stripper. Each rule rewrites a word-final suffix; the
// longest matching suffix wins and at least one character of the word must
// remain before the suffix.
class StemRules {
 public:
  StemRules() = default;
  explicit StemRules(std::vector<std::pair<std::string, std::string>> rules);

  // One rule per line: "suffix -> replacement". Blank lines and lines
  // starting with '#' are skipped. The replacement may be empty.
  static StemRules load(const std::filesystem::path& path);

  std::string stem(std::string_view word) const;
  std::size_t size() const { return rules_.size(); }

 private:
  // Sorted by descending suffix length, then by suffix.
  std::vector<std::pair<std::string, std::string>> rules_;
};

// Equivalence classes of words; two words are synonyms when they share a class.
class SynonymLexicon {
 public:
  SynonymLexicon() = default;

  void add_class(const std::vector<std::string>& words);

  // One class per line, words separated by spaces.
  static SynonymLexicon load(const std::filesystem::path& path);

  bool synonymous(std::string_view a, std::string_view b) const;
  std::size_t class_count() const { return classes_; }

 private:
  std::map<std::string, std::vector<std::size_t>, std::less<>> word_classes_;
  std::size_t classes_ = 0;
};

// Paraphrase pairs "source ||| target". Only single-word entries take part in
// matching; multi-word entries are stored but ignored by the aligner.
class ParaphraseTable {
 public:
  using Phrase = std::vector<std::string>;

  ParaphraseTable() = default;

  void add(Phrase source, Phrase target);

  static ParaphraseTable load(const std::filesystem::path& path);

  // Symmetric: true when either direction is listed as a single-word entry.
  bool paraphrase(std::string_view a, std::string_view b) const;

  const std::map<Phrase, std::set<Phrase>>& entries() const { return entries_; }
  std::size_t multiword_entries() const { return multiword_; }

 private:
  std::map<Phrase, std::set<Phrase>> entries_;
  std::set<std::pair<std::string, std::string>, std::less<>> single_;
  std::size_t multiword_ = 0;
};

}  // namespace entmt
