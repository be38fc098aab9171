#include <doctest.h>

#include <set>

#include "tribo/corpus.hpp"
#include "tribo/report.hpp"

using namespace tribo;

TEST_CASE("parse_corpus") {
  const auto entries = parse_corpus(
      "# header\n"
      "\n"
      "# first line\n"
      "# second line\n"
      "a: W(r) = 2*W(r-1) - W(r-4)\n"
      "\n"
      "b: W(r-3) = 2*W(r) - W(r+1)   # trailing comment\n");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].id == "a");
  CHECK(entries[0].source == "first line second line");
  CHECK(entries[1].source.empty());
  CHECK(render(entries[1].identity) == "W(r-3) = 2*W(r) - W(r+1)");

  CHECK_THROWS_AS(parse_corpus("a: W(r) = W(r)\na: W(r) = W(r)\n"), CorpusError);
  CHECK_THROWS_AS(parse_corpus("no colon here\n"), CorpusError);
  CHECK_THROWS_AS(parse_corpus(": W(r) = W(r)\n"), CorpusError);
  try {
    parse_corpus("\n\nx: W(r) = \n");
    FAIL("expected an error");
  } catch (const CorpusError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(load_corpus("/nonexistent/corpus.txt"), CorpusError);
}

TEST_CASE("bundled corpus contents") {
  const auto entries = load_corpus(default_corpus_path());
  CHECK(entries.size() >= 40);
  std::set<std::string> ids;
  for (const auto& e : entries) {
    ids.insert(e.id);
    CHECK_MESSAGE(!e.source.empty(), e.id);
  }
  for (const char* id : {"three-term", "add-t-familiar", "rec-s-16", "rec-s-17", "rec-s-14", "bridge-k-t",
                         "add-k-m1-0-1", "swap-k-m1-0-1", "square-17", "square-6", "k-square", "cube-11",
                         "cube-19", "cube-cross-0-1-1", "sq-add-c"})
    CHECK_MESSAGE(ids.count(id) == 1, id);
}

TEST_CASE("certificate json") {
  const auto cert = certify(parse("W(r) = 2*W(r-1)"));
  const auto j = to_json(cert);
  CHECK(j["schema"] == kCertificateSchema);
  CHECK(j["verdict"] == "refuted");
  CHECK(j["windows"]["r"]["size"] == 3);
  CHECK(j["seed_grid"]["max"] == 1);
  CHECK(j["counterexample"]["seed"].size() == 3);

  const auto t = to_json(derive_lucas_basis(-1, 0, 1));
  CHECK(t["schema"] == kTemplateSchema);
  CHECK(t["denominator"] == "22");
  CHECK(t["coefficients"][0][0] == "5");
}
