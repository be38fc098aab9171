// tribo: command-line front end for the Tribonacci workbench.
//
// Exit codes: 0 success/verified, 1 refuted, 2 parse or usage error,
// 3 unsupported term, 4 internal mismatch, 5 degenerate derivation offsets.

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tribo/certify.hpp"
#include "tribo/corpus.hpp"
#include "tribo/derive.hpp"
#include "tribo/fast_eval.hpp"
#include "tribo/report.hpp"
#include "tribo/sequence.hpp"

namespace {

enum Exit { kOk = 0, kRefuted = 1, kUsage = 2, kUnsupported = 3, kMismatch = 4, kDegenerate = 5 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

tribo::Index parse_index(const std::string& s) {
  tribo::Index v = 0;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  if (b != e && *b == '+') ++b;
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e || b == e) throw UsageError("not an integer: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<tribo::Index> parse_index_list(const std::string& s) {
  std::vector<tribo::Index> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_index(part));
  return out;
}

tribo::SequenceSpec select_spec(const std::string& seq, const std::string& seed) {
  if (!seed.empty()) {
    const auto parts = split(seed, ',');
    if (parts.size() != 3) throw UsageError("--seed expects w0,w1,w2");
    tribo::SeedVector sv;
    try {
      sv = {tribo::BigInt(parts[0]), tribo::BigInt(parts[1]), tribo::BigInt(parts[2])};
    } catch (const std::invalid_argument&) {
      throw UsageError("--seed expects three integers, got '" + seed + "'");
    }
    return tribo::SequenceSpec::generalized(sv);
  }
  if (seq == "T") return tribo::SequenceSpec::tribonacci();
  if (seq == "K") return tribo::SequenceSpec::lucas();
  throw UsageError("--seq must be T or K");
}

void print_certificate(const tribo::Certificate& cert, std::ostream& out) {
  out << "identity:    " << cert.identity << "\n";
  out << "verdict:     " << tribo::verdict_name(cert.verdict) << "\n";
  if (cert.verdict == tribo::Verdict::Unsupported) {
    out << "reason:      " << cert.unsupported_reason << "\n";
    return;
  }
  for (const auto& [v, w] : cert.windows) {
    out << "window " << tribo::var_char(v) << ":    degrees {";
    bool first = true;
    for (unsigned d : w.degrees) {
      out << (first ? "" : ", ") << d;
      first = false;
    }
    out << "}, " << w.size << " points from " << w.base << "\n";
  }
  out << "seed grid:   {0.." << cert.seed_grid_max << "}^3\n";
  out << "evaluations: " << cert.evaluations << "\n";
  if (cert.counterexample) {
    const auto& c = *cert.counterexample;
    out << "counterexample: seed (" << c.seed.w0 << ", " << c.seed.w1 << ", " << c.seed.w2 << "), r = " << c.r
        << ", s = " << c.s << ": lhs " << c.lhs << " != rhs " << c.rhs << "\n";
  }
}

int verdict_exit(tribo::Verdict v) {
  switch (v) {
    case tribo::Verdict::Verified: return kOk;
    case tribo::Verdict::Refuted: return kRefuted;
    case tribo::Verdict::Unsupported: return kUnsupported;
  }
  return kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Tribonacci workbench: exact terms, addition formulas, identity certification"};
  app.require_subcommand(1);

  // eval
  std::string eval_seq = "T", eval_seed, eval_n, eval_range;
  bool eval_fast = false;
  auto* eval = app.add_subcommand("eval", "Print exact sequence values");
  eval->add_option("--seq", eval_seq, "T or K")->capture_default_str();
  eval->add_option("--seed", eval_seed, "w0,w1,w2 for a generalized sequence");
  auto* n_opt = eval->add_option("--n", eval_n, "single index");
  auto* range_opt = eval->add_option("--range", eval_range, "lo..hi inclusive");
  n_opt->excludes(range_opt);
  eval->add_flag("--fast", eval_fast, "use logarithmic doubling");

  // derive
  std::string derive_basis = "T", derive_offsets;
  bool derive_json = false;
  auto* derive = app.add_subcommand("derive", "Derive an addition formula for W(r+s)");
  derive->add_option("--basis", derive_basis, "T or K")->capture_default_str();
  derive->add_option("--offsets", derive_offsets, "three distinct W offsets, e.g. -1,0,1")->required();
  derive->add_flag("--json", derive_json, "print the structured template");

  // certify
  std::string certify_text, certify_file;
  bool certify_json = false;
  auto* certify = app.add_subcommand("certify", "Prove or refute an identity for all integers");
  auto* text_opt = certify->add_option("identity", certify_text, "identity text");
  auto* file_opt = certify->add_option("--file", certify_file, "read the identity from a file");
  text_opt->excludes(file_opt);
  certify->add_flag("--json", certify_json, "print the certificate as JSON");

  // corpus
  std::string corpus_only, corpus_path;
  unsigned corpus_mutate = 0;
  bool corpus_json = false;
  auto* corpus = app.add_subcommand("corpus", "Certify every bundled identity");
  corpus->add_option("--only", corpus_only, "certify a single entry id");
  corpus->add_option("--corpus", corpus_path, "corpus file (default: $TRIBO_CORPUS or the bundled file)");
  corpus->add_option("--mutate", corpus_mutate,
                     "test hook: add 1 to the k-th canonical coefficient of every entry (1-based)");
  corpus->add_flag("--json", corpus_json, "print all certificates as JSON");

  // bench
  std::string bench_n, bench_strategies = "iterate,double,matrix", bench_seq = "T", bench_seed;
  auto* benchc = app.add_subcommand("bench", "Time exact term strategies (CSV)");
  benchc->add_option("--n", bench_n, "comma-separated indices")->required();
  benchc->add_option("--strategies", bench_strategies, "subset of iterate,double,matrix")->capture_default_str();
  benchc->add_option("--seq", bench_seq, "T or K")->capture_default_str();
  benchc->add_option("--seed", bench_seed, "w0,w1,w2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) {
      const auto spec = select_spec(eval_seq, eval_seed);
      auto value = [&](tribo::Index n) { return eval_fast ? tribo::fast_term(spec, n) : tribo::term(spec, n); };
      if (!eval_n.empty()) {
        std::cout << value(parse_index(eval_n)) << "\n";
      } else if (!eval_range.empty()) {
        const auto dots = eval_range.find("..");
        if (dots == std::string::npos) throw UsageError("--range expects lo..hi");
        const auto lo = parse_index(eval_range.substr(0, dots));
        const auto hi = parse_index(eval_range.substr(dots + 2));
        if (lo > hi) throw UsageError("--range: lo > hi");
        if (eval_fast) {
          for (auto n = lo; n <= hi; ++n) std::cout << tribo::fast_term(spec, n) << "\n";
        } else {
          for (const auto& v : tribo::term_range(spec, lo, hi)) std::cout << v << "\n";
        }
      } else {
        throw UsageError("eval needs --n or --range");
      }
      return kOk;
    }

    if (*derive) {
      tribo::Basis basis;
      if (derive_basis == "T") basis = tribo::Basis::Tribonacci;
      else if (derive_basis == "K") basis = tribo::Basis::Lucas;
      else throw UsageError("--basis must be T or K");
      const auto off = parse_index_list(derive_offsets);
      if (off.size() != 3) throw UsageError("--offsets expects exactly three integers");
      if (off[0] == off[1] || off[0] == off[2] || off[1] == off[2])
        throw UsageError("--offsets must be pairwise distinct");
      try {
        const auto t = tribo::derive(basis, off[0], off[1], off[2]);
        if (derive_json) std::cout << tribo::to_json(t).dump(2) << "\n";
        else std::cout << t.text() << "\n";
      } catch (const tribo::DegenerateOffsets& e) {
        std::cerr << "degenerate offsets: " << e.what() << "\n";
        return kDegenerate;
      }
      return kOk;
    }

    if (*certify) {
      std::string text = certify_text;
      if (!certify_file.empty()) {
        std::ifstream in(certify_file);
        if (!in) throw UsageError("cannot open " + certify_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
      }
      if (text.empty()) throw UsageError("certify needs an identity or --file");
      tribo::Identity id;
      try {
        id = tribo::parse(text);
      } catch (const tribo::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
      }
      const auto cert = tribo::certify(id);
      if (cert.counterexample) {
        auto [l, r] = tribo::evaluate(id, cert.counterexample->seed, cert.counterexample->r, cert.counterexample->s);
        if (l == r) {
          std::cerr << "internal mismatch: counterexample does not reproduce\n";
          return kMismatch;
        }
      }
      if (certify_json) std::cout << tribo::to_json(cert).dump(2) << "\n";
      else print_certificate(cert, std::cout);
      return verdict_exit(cert.verdict);
    }

    if (*corpus) {
      const auto path = corpus_path.empty() ? tribo::default_corpus_path() : std::filesystem::path(corpus_path);
      auto entries = tribo::load_corpus(path);
      if (!corpus_only.empty()) {
        std::erase_if(entries, [&](const auto& e) { return e.id != corpus_only; });
        if (entries.empty()) throw UsageError("no corpus entry with id '" + corpus_only + "'");
      }
      const tribo::Verdict want = corpus_mutate ? tribo::Verdict::Refuted : tribo::Verdict::Verified;
      std::size_t good = 0;
      bool unsupported = false;
      nlohmann::json all = nlohmann::json::array();
      for (const auto& e : entries) {
        tribo::Identity id = e.identity;
        if (corpus_mutate) {
          const auto mutants = tribo::single_coefficient_mutants(id);
          id = mutants[(corpus_mutate - 1) % mutants.size()];
        }
        const auto cert = tribo::certify(id);
        good += cert.verdict == want;
        unsupported = unsupported || cert.verdict == tribo::Verdict::Unsupported;
        if (corpus_json) {
          auto j = tribo::to_json(cert);
          j["id"] = e.id;
          j["source"] = e.source;
          all.push_back(j);
        } else {
          std::cout << e.id << std::string(e.id.size() < 18 ? 18 - e.id.size() : 1, ' ')
                    << tribo::verdict_name(cert.verdict) << "  (" << cert.evaluations << " evaluations)\n";
        }
      }
      if (corpus_json) std::cout << all.dump(2) << "\n";
      else
        std::cout << good << "/" << entries.size() << (corpus_mutate ? " mutants refuted" : " verified") << "\n";
      if (good == entries.size()) return kOk;
      return unsupported ? kUnsupported : kRefuted;
    }

    if (*benchc) {
      const auto spec = select_spec(bench_seq, bench_seed);
      const auto ns = parse_index_list(bench_n);
      std::vector<tribo::Strategy> strategies;
      for (const auto& name : split(bench_strategies, ','))
        if (!name.empty()) strategies.push_back(tribo::parse_strategy(name));
      if (strategies.empty()) throw UsageError("--strategies is empty");
      try {
        std::cout << tribo::bench_csv(tribo::bench(spec, ns, strategies));
      } catch (const tribo::VerificationMismatch& e) {
        std::cerr << e.what() << "\n";
        return kMismatch;
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const tribo::CorpusError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
