#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace entmt {

struct Token {
  std::string surface;
  std::string norm;  // lowercase(surface)

  bool operator==(const Token&) const = default;
};

class Segment {
 public:
  Segment() = default;
  explicit Segment(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const std::vector<Token>& tokens() const { return tokens_; }
  std::size_t length() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const Token& operator[](std::size_t i) const { return tokens_[i]; }

  // Surfaces joined by single spaces.
  std::string text() const;

  bool operator==(const Segment&) const = default;

 private:
  std::vector<Token> tokens_;
};

struct ParallelCorpus {
  std::vector<Segment> references;
  std::vector<std::string> system_ids;
  // hypotheses[s][i] is system s's output for segment i.
  std::vector<std::vector<Segment>> hypotheses;

  std::size_t size() const { return references.size(); }
  std::size_t system_index(std::string_view id) const;  // npos if absent
};

// ASCII lowercase; bytes >= 0x80 pass through unchanged.
std::string normalize(std::string_view surface);

// Splits on whitespace, then splits each whitespace-delimited piece into
// maximal runs of word characters and maximal runs of punctuation.
// Word characters are ASCII alphanumerics and any byte >= 0x80 (UTF-8).
Segment tokenize(std::string_view raw);

// Reads a UTF-8 text file as lines. LF or CRLF; a single trailing empty line
// (i.e. a final newline) is dropped, interior empty lines are kept.
std::vector<std::string> read_lines(const std::filesystem::path& path);

struct HypothesisFile {
  std::string system_id;
  std::filesystem::path path;
};

ParallelCorpus load_corpus(const std::filesystem::path& ref_path,
                           const std::vector<HypothesisFile>& hyps);

}  // namespace entmt
