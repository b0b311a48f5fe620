#include "entmt/text.hpp"

#include <fstream>
#include <sstream>

#include "entmt/error.hpp"

namespace entmt {

namespace {

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_word_char(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

void push_token(std::vector<Token>& out, std::string_view surface) {
  out.push_back(Token{std::string(surface), normalize(surface)});
}

}  // namespace

std::string Segment::text() const {
  std::string out;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (i) out += ' ';
    out += tokens_[i].surface;
  }
  return out;
}

std::size_t ParallelCorpus::system_index(std::string_view id) const {
  for (std::size_t s = 0; s < system_ids.size(); ++s)
    if (system_ids[s] == id) return s;
  return std::string_view::npos;
}

std::string normalize(std::string_view surface) {
  std::string out(surface);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

Segment tokenize(std::string_view raw) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < raw.size()) {
    auto c = static_cast<unsigned char>(raw[i]);
    if (is_space(c)) {
      ++i;
      continue;
    }
    bool word = is_word_char(c);
    std::size_t j = i + 1;
    while (j < raw.size()) {
      auto d = static_cast<unsigned char>(raw[j]);
      if (is_space(d) || is_word_char(d) != word) break;
      ++j;
    }
    push_token(tokens, raw.substr(i, j - i));
    i = j;
  }
  return Segment(std::move(tokens));
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string content = buf.str();

  std::vector<std::string> lines;
  std::size_t start = 0;
  while (true) {
    std::size_t nl = content.find('\n', start);
    std::string line = content.substr(start, nl == std::string::npos ? std::string::npos : nl - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    if (nl == std::string::npos) break;
    start = nl + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

ParallelCorpus load_corpus(const std::filesystem::path& ref_path,
                           const std::vector<HypothesisFile>& hyps) {
  ParallelCorpus corpus;
  const auto ref_lines = read_lines(ref_path);
  corpus.references.reserve(ref_lines.size());
  for (const auto& line : ref_lines) corpus.references.push_back(tokenize(line));

  for (const auto& hyp : hyps) {
    if (corpus.system_index(hyp.system_id) != std::string_view::npos)
      throw ConfigError("duplicate system id '" + hyp.system_id + "'");
    const auto lines = read_lines(hyp.path);
    if (lines.size() != ref_lines.size()) {
      throw CorpusShapeError("hypothesis file '" + hyp.path.string() + "' has " +
                             std::to_string(lines.size()) + " lines but reference file '" +
                             ref_path.string() + "' has " + std::to_string(ref_lines.size()));
    }
    std::vector<Segment> segs;
    segs.reserve(lines.size());
    for (const auto& line : lines) segs.push_back(tokenize(line));
    corpus.system_ids.push_back(hyp.system_id);
    corpus.hypotheses.push_back(std::move(segs));
  }
  return corpus;
}

}  // namespace entmt
