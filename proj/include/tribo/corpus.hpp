#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tribo/identity.hpp"

namespace tribo {

/// One bundled identity. `source` is the text of the `#` lines directly above it.
struct CorpusEntry {
  std::string id;
  std::string source;
  std::string text;
  Identity identity;
};

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Entries are `id: identity` lines. Throws CorpusError (with line number) on
/// duplicate ids, missing ids or identities that do not parse.
std::vector<CorpusEntry> parse_corpus(std::string_view text);

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path);

/// Corpus path: TRIBO_CORPUS if set, else the path baked in at build time.
std::filesystem::path default_corpus_path();

}  // namespace tribo
