// palperm: classify permutations by palindromic value, census whole
// symmetric groups, and verify the structural theorems behind the classes.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "palperm/palperm.hpp"

namespace {

using namespace palperm;

int default_workers() {
  if (const char* env = std::getenv("PALPERM_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("PALPERM_CACHE_DIR")) return env;
  return ".palperm-cache";
}

std::pair<int, int> parse_degree_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    const int a = std::stoi(text.substr(0, dots));
    const int b = std::stoi(text.substr(dots + 2));
    if (a > b) throw InputError("empty degree range '" + text + "'");
    return {a, b};
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("bad degree range '" + text + "' (expected N or A..B)");
  }
}

CensusRecord cached_census(const CensusCache& cache, bool use_cache, int n,
                           Mode mode, int workers, std::size_t witness_cap) {
  const bool cacheable = use_cache && witness_cap == default_witness_cap;
  if (cacheable) {
    if (auto hit = cache.load(n, mode)) return *hit;
  }
  CensusRecord record = census(n, mode, workers, witness_cap);
  if (cacheable) cache.store(record);
  return record;
}

int run_classify(const std::string& text, int degree_hint, Mode mode,
                 Format format) {
  const Permutation p = parse_permutation(text, degree_hint);
  const ClassifyReport report = make_classify_report(p, mode);
  switch (format) {
    case Format::text: std::cout << classify_text(report); break;
    case Format::json: std::cout << classify_json(report); break;
    case Format::csv: std::cout << classify_csv(report); break;
  }
  return 0;
}

int run_census(int n, Mode mode, int workers, Format format,
               const CensusCache& cache, bool use_cache,
               std::size_t witness_cap) {
  const CensusRecord record =
      cached_census(cache, use_cache, n, mode, workers, witness_cap);
  std::cout << emit_census(record, format);
  return 0;
}

int run_sequences(int n_max, Mode mode, int workers, Format format,
                  const CensusCache& cache, bool use_cache) {
  if (n_max < 1)
    throw InputError("sequences: max degree must be at least 1");
  std::vector<SequenceRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n)
    rows.push_back(sequence_row(cached_census(cache, use_cache, n, mode,
                                              workers, default_witness_cap)));
  switch (format) {
    case Format::text: std::cout << sequences_text(rows); break;
    case Format::json: std::cout << sequences_json(rows); break;
    case Format::csv: std::cout << sequences_csv(rows); break;
  }
  return 0;
}

int run_witness(int n, Mode mode, int workers, Format format,
                const CensusCache& cache, bool use_cache,
                std::size_t witness_cap) {
  const CensusRecord record =
      cached_census(cache, use_cache, n, mode, workers, witness_cap);
  const auto ie = check_inclusion_exclusion(record);
  if (format == Format::json) {
    nlohmann::json j{{"n", n},
                     {"mode", to_string(mode)},
                     {"residual", ie.residual},
                     {"witnesses", record.neither_witnesses}};
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  if (record.neither_witnesses.empty()) {
    std::cout << "(none)\n";
    return 0;
  }
  for (const auto& w : record.neither_witnesses)
    std::cout << witness_one_line(w) << '\n';
  return 0;
}

const char* pf(bool ok) { return ok ? "PASS" : "FAIL"; }

bool verify_dihedral_range(int lo, int hi, Format format) {
  bool all_ok = true;
  nlohmann::json arr = nlohmann::json::array();
  if (format == Format::csv)
    std::cout << "n,order,order_ok,relations_ok,sigma_rgspp,tau_lgspp,pass\n";
  for (int n = lo; n <= hi; ++n) {
    const DihedralReport r = verify_dihedral(n);
    all_ok = all_ok && r.all_ok();
    switch (format) {
      case Format::json: arr.push_back(r); break;
      case Format::csv:
        std::cout << r.n << ',' << r.order << ',' << r.order_ok << ','
                  << r.relations_ok << ',' << r.sigma_rgspp << ','
                  << r.tau_lgspp << ',' << r.all_ok() << '\n';
        break;
      case Format::text:
        std::cout << "n=" << r.n << " order=" << r.order
                  << " order_ok=" << r.order_ok
                  << " relations_ok=" << r.relations_ok
                  << " sigma_rgspp=" << r.sigma_rgspp
                  << " tau_lgspp=" << r.tau_lgspp << ' ' << pf(r.all_ok())
                  << '\n';
        break;
    }
  }
  if (format == Format::json) std::cout << arr.dump(2) << '\n';
  return all_ok;
}

bool verify_inverse_range(int lo, int hi, Mode mode, Format format) {
  constexpr PalinClass classes[] = {PalinClass::lpp, PalinClass::rpp,
                                    PalinClass::lgspp, PalinClass::rgspp};
  bool all_ok = true;
  nlohmann::json arr = nlohmann::json::array();
  if (format == Format::csv) std::cout << "n,class,holds,counterexamples\n";
  for (int n = lo; n <= hi; ++n) {
    bool n_ok = true;
    std::string detail;
    for (const PalinClass cls : classes) {
      const InverseClosureReport r = verify_inverse_closure(n, cls, mode);
      n_ok = n_ok && r.holds;
      switch (format) {
        case Format::json: arr.push_back(r); break;
        case Format::csv:
          std::cout << n << ',' << to_string(cls) << ',' << r.holds << ','
                    << r.counterexamples.size() << '\n';
          break;
        case Format::text:
          detail += std::string(" ") + to_string(cls) + "=" +
                    (r.holds ? "ok" : "FAIL(" +
                                          std::to_string(r.counterexamples.size()) +
                                          " counterexamples)");
          break;
      }
    }
    if (format == Format::text)
      std::cout << "n=" << n << detail << ' ' << pf(n_ok) << '\n';
    all_ok = all_ok && n_ok;
  }
  if (format == Format::json) std::cout << arr.dump(2) << '\n';
  return all_ok;
}

bool verify_uniqueness_range(int lo, int hi, Mode mode, int workers,
                             const CensusCache& cache, bool use_cache,
                             Format format) {
  bool all_ok = true;
  nlohmann::json arr = nlohmann::json::array();
  if (format == Format::csv)
    std::cout << "n,lpp_count,rpp_count,pp_count,lpp_is_identity,"
                 "rpp_is_reversal,pass\n";
  for (int n = lo; n <= hi; ++n) {
    const CensusRecord r =
        cached_census(cache, use_cache, n, mode, workers, default_witness_cap);
    const bool id_lpp = classify(Permutation::identity(n), mode).lpp;
    const bool rev_rpp = classify(Permutation::reversal(n), mode).rpp;
    const bool expected_pp = n == 1 ? r.counts.pp == 1 : r.counts.pp == 0;
    const bool ok = r.counts.pp_l == 1 && r.counts.pp_r == 1 && expected_pp &&
                    id_lpp && rev_rpp;
    all_ok = all_ok && ok;
    switch (format) {
      case Format::json:
        arr.push_back({{"n", n},
                       {"lpp_count", r.counts.pp_l},
                       {"rpp_count", r.counts.pp_r},
                       {"pp_count", r.counts.pp},
                       {"lpp_is_identity", id_lpp},
                       {"rpp_is_reversal", rev_rpp},
                       {"pass", ok}});
        break;
      case Format::csv:
        std::cout << n << ',' << r.counts.pp_l << ',' << r.counts.pp_r << ','
                  << r.counts.pp << ',' << id_lpp << ',' << rev_rpp << ','
                  << ok << '\n';
        break;
      case Format::text:
        std::cout << "n=" << n << " lpp_count=" << r.counts.pp_l
                  << " rpp_count=" << r.counts.pp_r
                  << " pp_count=" << r.counts.pp
                  << " lpp_is_identity=" << id_lpp
                  << " rpp_is_reversal=" << rev_rpp << ' ' << pf(ok) << '\n';
        break;
    }
  }
  if (format == Format::json) std::cout << arr.dump(2) << '\n';
  return all_ok;
}

// Exploratory: does some (RGSPP, LGSPP) pair generate all of S_n?
int run_gensearch(int n, bool count_all) {
  if (n < 2) throw InputError("gensearch: need degree >= 2");
  if (n > 7)
    throw GuardError("gensearch: degree " + std::to_string(n) +
                     " exceeds search cap 7");
  std::vector<Permutation> rgspps, lgspps;
  enumerate_range(n, 0, factorial(n), [&](std::span<const int> images) {
    const Permutation p = Permutation::from_one_line(
        std::vector<int>(images.begin(), images.end()));
    const ClassFlags f = classify(p);
    if (f.rgspp) rgspps.push_back(p);
    if (f.lgspp) lgspps.push_back(p);
  });
  std::cout << "n=" << n << " |GSPP_rho|=" << rgspps.size()
            << " |GSPP_lambda|=" << lgspps.size() << '\n';
  const std::uint64_t full = factorial(n);
  std::uint64_t generating_pairs = 0;
  std::optional<std::pair<Permutation, Permutation>> first;
  for (const auto& r : rgspps) {
    for (const auto& l : lgspps) {
      const std::vector<Permutation> gens{r, l};
      if (closure(n, gens).order() == full) {
        ++generating_pairs;
        if (!first) first = {r, l};
        if (!count_all) break;
      }
    }
    if (first && !count_all) break;
  }
  if (!first) {
    std::cout << "no (RGSPP, LGSPP) pair generates S_" << n << '\n';
  } else {
    std::cout << "generating pair: rgspp=" << format_one_line(first->first)
              << " lgspp=" << format_one_line(first->second) << " -> <pair> = S_"
              << n << " (order " << full << ")\n";
    if (count_all)
      std::cout << "generating pairs total: " << generating_pairs << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"palindromic and generalized Smarandache palindromic "
               "classification of permutations in S_n"};
  app.require_subcommand(1);

  std::string mode_name = "token";
  std::string format_name = "text";
  std::string cache_dir = default_cache_dir();
  int workers = default_workers();
  bool no_cache = false;
  std::size_t witness_cap = default_witness_cap;

  auto add_common = [&](CLI::App* sub, bool with_cache) {
    sub->add_option("--mode", mode_name, "value semantics: token or digit")
        ->check(CLI::IsMember({"token", "digit"}));
    sub->add_option("--format", format_name, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    if (with_cache) {
      sub->add_option("--workers", workers,
                      "parallel workers (default: machine parallelism, or "
                      "PALPERM_WORKERS)");
      sub->add_option("--cache-dir", cache_dir,
                      "census cache directory (default: .palperm-cache, or "
                      "PALPERM_CACHE_DIR)");
      sub->add_flag("--no-cache", no_cache, "neither read nor write the cache");
    }
  };

  // classify
  auto* cmd_classify = app.add_subcommand(
      "classify", "classify one permutation given as \"2,3,1\" or \"(1 2 3)\"");
  std::string perm_text;
  int degree_hint = 0;
  cmd_classify->add_option("permutation", perm_text, "permutation text")
      ->required();
  cmd_classify->add_option("-n,--degree", degree_hint,
                           "degree hint for cycle syntax");
  add_common(cmd_classify, false);

  // census
  auto* cmd_census = app.add_subcommand(
      "census", "classify all of S_n and report the six class counts");
  int census_n = 0;
  cmd_census->add_option("-n,--degree", census_n, "degree (1..12)")->required();
  cmd_census->add_option("--witness-cap", witness_cap,
                         "max neither-class witnesses kept");
  add_common(cmd_census, true);

  // verify
  auto* cmd_verify = app.add_subcommand(
      "verify", "check the dihedral, inverse-closure or uniqueness claims");
  std::string target;
  std::string range_text;
  cmd_verify->add_option("target", target, "dihedral, inverse or uniqueness")
      ->required()
      ->check(CLI::IsMember({"dihedral", "inverse", "uniqueness"}));
  cmd_verify->add_option("range", range_text, "degree range, e.g. 3..8 or 5")
      ->required();
  add_common(cmd_verify, true);

  // sequences
  auto* cmd_sequences = app.add_subcommand(
      "sequences", "emit |GSPP_rho|, |GSPP_lambda|, |GSPP| and the residual "
                   "for n = 1..max");
  int n_max = 0;
  cmd_sequences->add_option("--max-n", n_max, "largest degree (<= 12)")
      ->required();
  add_common(cmd_sequences, true);

  // witness
  auto* cmd_witness = app.add_subcommand(
      "witness", "dump permutations that are in neither GSP class");
  int witness_n = 0;
  cmd_witness->add_option("-n,--degree", witness_n, "degree (1..12)")
      ->required();
  cmd_witness->add_option("--witness-cap", witness_cap,
                          "max witnesses kept");
  add_common(cmd_witness, true);

  // gensearch
  auto* cmd_gensearch = app.add_subcommand(
      "gensearch",
      "exploratory: search for a (RGSPP, LGSPP) pair generating S_n");
  int gensearch_n = 0;
  bool gensearch_all = false;
  cmd_gensearch->add_option("-n,--degree", gensearch_n, "degree (2..7)")
      ->required();
  cmd_gensearch->add_flag("--all", gensearch_all,
                          "count every generating pair instead of stopping at "
                          "the first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Mode mode = mode_from_string(mode_name);
    const Format format = format_from_string(format_name);
    const CensusCache cache{cache_dir};
    if (cmd_classify->parsed())
      return run_classify(perm_text, degree_hint, mode, format);
    if (cmd_census->parsed())
      return run_census(census_n, mode, workers, format, cache, !no_cache,
                        witness_cap);
    if (cmd_sequences->parsed()) {
      // tables default to csv
      const Format seq_format =
          cmd_sequences->count("--format") > 0 ? format : Format::csv;
      return run_sequences(n_max, mode, workers, seq_format, cache, !no_cache);
    }
    if (cmd_witness->parsed())
      return run_witness(witness_n, mode, workers, format, cache, !no_cache,
                         witness_cap);
    if (cmd_gensearch->parsed()) return run_gensearch(gensearch_n, gensearch_all);
    if (cmd_verify->parsed()) {
      const auto [lo, hi] = parse_degree_range(range_text);
      bool ok = false;
      if (target == "dihedral") {
        ok = verify_dihedral_range(lo, hi, format);
      } else if (target == "inverse") {
        ok = verify_inverse_range(lo, hi, mode, format);
      } else {
        ok = verify_uniqueness_range(lo, hi, mode, workers, cache, !no_cache,
                                     format);
      }
      return ok ? 0 : 1;
    }
    return 2;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
