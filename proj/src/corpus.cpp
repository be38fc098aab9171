#include "tribo/corpus.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#ifndef TRIBO_DEFAULT_CORPUS
#define TRIBO_DEFAULT_CORPUS "data/corpus.txt"
#endif

namespace tribo {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::set<std::string> seen;
  std::string pending;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty()) {
      pending.clear();
      continue;
    }
    if (line.front() == '#') {
      if (!pending.empty()) pending += ' ';
      pending += trim(line.substr(1));
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos || trim(line.substr(0, colon)).empty())
      throw CorpusError("corpus line " + std::to_string(line_no) + ": expected `id: identity`");
    CorpusEntry e;
    e.id = std::string(trim(line.substr(0, colon)));
    e.text = std::string(trim(line.substr(colon + 1)));
    e.source = pending;
    if (!seen.insert(e.id).second)
      throw CorpusError("corpus line " + std::to_string(line_no) + ": duplicate id '" + e.id + "'");
    try {
      e.identity = parse(e.text);
    } catch (const ParseError& err) {
      throw CorpusError("corpus line " + std::to_string(line_no) + " (" + e.id + "): " + err.what());
    }
    out.push_back(std::move(e));
    pending.clear();
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open corpus file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

std::filesystem::path default_corpus_path() {
  if (const char* env = std::getenv("TRIBO_CORPUS"); env && *env) return env;
  return TRIBO_DEFAULT_CORPUS;
}

}  // namespace tribo
