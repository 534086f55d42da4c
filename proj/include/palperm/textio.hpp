#pragma once

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "palperm/census.hpp"
#include "palperm/group.hpp"
#include "palperm/palindromics.hpp"
#include "palperm/permutation.hpp"

namespace palperm {

// Bump when a change could alter census results; keys the on-disk cache.
inline constexpr const char* algorithm_version = "gsp-census/1";

enum class Format { text, json, csv };

inline Format format_from_string(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw InputError("unknown format '" + s + "' (expected text, json or csv)");
}

// ---------------------------------------------------------------------------
// Permutation text syntax: one-line "2,3,1" or cycles "(1 2 3)(4 5)".

namespace detail {

inline bool is_sep(char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); }

inline std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw InputError(std::string(what) + ": unexpected character '" +
                       text[i] + "' at position " + std::to_string(i + 1));
    std::size_t j = i;
    long v = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      v = v * 10 + (text[j] - '0');
      if (v > 1'000'000)
        throw InputError(std::string(what) + ": number too large at position " +
                         std::to_string(i + 1));
      ++j;
    }
    values.push_back(static_cast<int>(v));
    i = j;
  }
  return values;
}

}  // namespace detail

/// Parses either syntax. For cycle syntax the degree is the largest point
/// mentioned unless a larger hint is given; the hint is ignored for
/// one-line syntax, where the length fixes the degree.
inline Permutation parse_permutation(const std::string& text, int degree_hint = 0) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw InputError("empty permutation text");
  if (text[first] == '(') {
    CycleList cycles;
    int max_point = 0;
    std::size_t i = first;
    while (i < text.size()) {
      if (detail::is_sep(text[i])) {
        ++i;
        continue;
      }
      if (text[i] != '(')
        throw InputError("cycle syntax: expected '(' at position " +
                         std::to_string(i + 1));
      const std::size_t close = text.find(')', i);
      if (close == std::string::npos)
        throw InputError("cycle syntax: unclosed '(' at position " +
                         std::to_string(i + 1));
      const auto entries =
          detail::parse_int_list(text.substr(i + 1, close - i - 1), "cycle syntax");
      if (!entries.empty()) {
        for (int x : entries) max_point = std::max(max_point, x);
        cycles.push_back(entries);
      }
      i = close + 1;
    }
    const int n = std::max(degree_hint, max_point);
    if (n < 1) throw InputError("cycle syntax: no points given");
    return Permutation::from_cycles(n, cycles);
  }
  auto images = detail::parse_int_list(text, "one-line syntax");
  return Permutation::from_one_line(std::move(images));
}

// ---------------------------------------------------------------------------
// JSON conversions (nlohmann ADL hooks).

inline void to_json(nlohmann::json& j, const ClassCounts& c) {
  j = nlohmann::json{{"pp_l", c.pp_l},     {"pp_r", c.pp_r},
                     {"pp", c.pp},         {"gspp_l", c.gspp_l},
                     {"gspp_r", c.gspp_r}, {"gspp", c.gspp}};
}

inline void from_json(const nlohmann::json& j, ClassCounts& c) {
  j.at("pp_l").get_to(c.pp_l);
  j.at("pp_r").get_to(c.pp_r);
  j.at("pp").get_to(c.pp);
  j.at("gspp_l").get_to(c.gspp_l);
  j.at("gspp_r").get_to(c.gspp_r);
  j.at("gspp").get_to(c.gspp);
}

inline void to_json(nlohmann::json& j, const CensusRecord& r) {
  j = nlohmann::json{{"n", r.n},
                     {"mode", to_string(r.mode)},
                     {"counts", r.counts},
                     {"union_size", r.union_size},
                     {"neither_witnesses", r.neither_witnesses},
                     {"checksum", r.checksum},
                     {"elapsed_seconds", r.elapsed_seconds}};
}

inline void from_json(const nlohmann::json& j, CensusRecord& r) {
  r.n = j.at("n").get<int>();
  r.mode = mode_from_string(j.at("mode").get<std::string>());
  j.at("counts").get_to(r.counts);
  j.at("union_size").get_to(r.union_size);
  j.at("neither_witnesses").get_to(r.neither_witnesses);
  j.at("checksum").get_to(r.checksum);
  j.at("elapsed_seconds").get_to(r.elapsed_seconds);
}

inline void to_json(nlohmann::json& j, const DihedralReport& r) {
  j = nlohmann::json{{"n", r.n},
                     {"order", r.order},
                     {"order_ok", r.order_ok},
                     {"relations_ok", r.relations_ok},
                     {"sigma_rgspp", r.sigma_rgspp},
                     {"tau_lgspp", r.tau_lgspp},
                     {"pass", r.all_ok()}};
}

inline void to_json(nlohmann::json& j, const InverseClosureReport& r) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& p : r.counterexamples) witnesses.push_back(p.images());
  j = nlohmann::json{{"n", r.n},
                     {"class", to_string(r.palin_class)},
                     {"holds", r.holds},
                     {"counterexamples", witnesses}};
}

// ---------------------------------------------------------------------------
// Census emission.

inline std::string witness_one_line(const std::vector<int>& images) {
  std::string out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(images[i]);
  }
  return out;
}

inline std::string census_text(const CensusRecord& r) {
  const auto ie = check_inclusion_exclusion(r);
  std::ostringstream out;
  out << "census n=" << r.n << " mode=" << to_string(r.mode) << '\n'
      << "pp_l=" << r.counts.pp_l << " pp_r=" << r.counts.pp_r
      << " pp=" << r.counts.pp << '\n'
      << "gspp_l=" << r.counts.gspp_l << " gspp_r=" << r.counts.gspp_r
      << " gspp=" << r.counts.gspp << '\n'
      << "union=" << r.union_size << " residual=" << ie.residual
      << " holds=" << (ie.holds ? "true" : "false") << '\n'
      << "checksum=" << r.checksum << " elapsed_seconds=" << r.elapsed_seconds
      << '\n';
  if (r.neither_witnesses.empty()) {
    out << "neither_witnesses: (none)\n";
  } else {
    out << "neither_witnesses:";
    for (const auto& w : r.neither_witnesses) out << ' ' << witness_one_line(w);
    out << '\n';
  }
  return out.str();
}

inline std::string census_csv(const CensusRecord& r) {
  const auto ie = check_inclusion_exclusion(r);
  std::ostringstream out;
  out << "n,mode,pp_l,pp_r,pp,gspp_l,gspp_r,gspp,union_size,residual,holds,"
         "checksum,elapsed_seconds\n"
      << r.n << ',' << to_string(r.mode) << ',' << r.counts.pp_l << ','
      << r.counts.pp_r << ',' << r.counts.pp << ',' << r.counts.gspp_l << ','
      << r.counts.gspp_r << ',' << r.counts.gspp << ',' << r.union_size << ','
      << ie.residual << ',' << (ie.holds ? "true" : "false") << ','
      << r.checksum << ',' << r.elapsed_seconds << '\n';
  return out.str();
}

inline std::string census_json(const CensusRecord& r) {
  return nlohmann::json(r).dump(2) + "\n";
}

inline std::string emit_census(const CensusRecord& r, Format format) {
  switch (format) {
    case Format::json: return census_json(r);
    case Format::csv: return census_csv(r);
    case Format::text: return census_text(r);
  }
  return {};
}

// ---------------------------------------------------------------------------
// Sequence table: the three class sizes and the inclusion-exclusion
// residual per degree.

struct SequenceRow {
  int n = 0;
  std::uint64_t gspp_r = 0;
  std::uint64_t gspp_l = 0;
  std::uint64_t gspp = 0;
  std::uint64_t residual = 0;
  bool holds = false;
};

inline SequenceRow sequence_row(const CensusRecord& r) {
  const auto ie = check_inclusion_exclusion(r);
  return {r.n,          r.counts.gspp_r, r.counts.gspp_l,
          r.counts.gspp, ie.residual,    ie.holds};
}

inline std::string sequences_csv(const std::vector<SequenceRow>& rows) {
  std::ostringstream out;
  out << "n,gspp_r,gspp_l,gspp,residual,holds\n";
  for (const auto& row : rows)
    out << row.n << ',' << row.gspp_r << ',' << row.gspp_l << ',' << row.gspp
        << ',' << row.residual << ',' << (row.holds ? "true" : "false")
        << '\n';
  return out.str();
}

inline std::string sequences_text(const std::vector<SequenceRow>& rows) {
  std::ostringstream out;
  out << "  n    gspp_r    gspp_l      gspp  residual  holds\n";
  for (const auto& row : rows) {
    out << std::setw(3) << row.n << std::setw(10) << row.gspp_r
        << std::setw(10) << row.gspp_l << std::setw(10) << row.gspp
        << std::setw(10) << row.residual << "  "
        << (row.holds ? "true" : "false") << '\n';
  }
  return out.str();
}

inline std::string sequences_json(const std::vector<SequenceRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows)
    arr.push_back({{"n", row.n},
                   {"gspp_r", row.gspp_r},
                   {"gspp_l", row.gspp_l},
                   {"gspp", row.gspp},
                   {"residual", row.residual},
                   {"holds", row.holds}});
  return arr.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Classification report for a single permutation.

struct ClassifyReport {
  Permutation p;
  Mode mode = Mode::token;
  TokenSeq left;
  TokenSeq right;
  ClassFlags flags;
};

inline ClassifyReport make_classify_report(const Permutation& p, Mode mode) {
  ClassifyReport rep;
  rep.p = p;
  rep.mode = mode;
  rep.left = mode == Mode::token ? lpv(p) : to_digit_tokens(lpv(p));
  rep.right = mode == Mode::token ? rpv(p) : to_digit_tokens(rpv(p));
  rep.flags = classify(p, mode);
  return rep;
}

inline std::string classify_text(const ClassifyReport& rep) {
  auto value_line = [](std::span<const int> t) {
    std::string line = to_digit_string(t);
    if (is_gsp(t)) line += " = " + grouping_string(t);
    return line;
  };
  std::ostringstream out;
  out << "permutation: " << format_one_line(rep.p) << '\n'
      << format_two_row(rep.p) << '\n'
      << "cycles: " << format_cycles(to_cycles(rep.p)) << '\n'
      << "mode: " << to_string(rep.mode) << '\n'
      << "N_lambda = " << value_line(rep.left) << '\n'
      << "N_rho    = " << value_line(rep.right) << '\n'
      << "lpp=" << rep.flags.lpp << " rpp=" << rep.flags.rpp
      << " pp=" << rep.flags.pp << " lgspp=" << rep.flags.lgspp
      << " rgspp=" << rep.flags.rgspp << " gspp=" << rep.flags.gspp << '\n';
  return out.str();
}

inline std::string classify_json(const ClassifyReport& rep) {
  auto value_json = [](std::span<const int> t) {
    nlohmann::json j{{"value", to_digit_string(t)},
                     {"tokens", std::vector<int>(t.begin(), t.end())},
                     {"gsp", is_gsp(t)},
                     {"palindrome", is_palindrome(t)}};
    j["grouping"] = is_gsp(t) ? nlohmann::json(grouping_string(t))
                              : nlohmann::json(nullptr);
    return j;
  };
  nlohmann::json j{{"permutation", rep.p.images()},
                   {"one_line", format_one_line(rep.p)},
                   {"cycles", format_cycles(to_cycles(rep.p))},
                   {"mode", to_string(rep.mode)},
                   {"n_lambda", value_json(rep.left)},
                   {"n_rho", value_json(rep.right)},
                   {"flags",
                    {{"lpp", rep.flags.lpp},
                     {"rpp", rep.flags.rpp},
                     {"pp", rep.flags.pp},
                     {"lgspp", rep.flags.lgspp},
                     {"rgspp", rep.flags.rgspp},
                     {"gspp", rep.flags.gspp}}}};
  return j.dump(2) + "\n";
}

inline std::string classify_csv(const ClassifyReport& rep) {
  std::ostringstream out;
  out << "one_line,n_lambda,n_lambda_grouping,n_rho,n_rho_grouping,lpp,rpp,pp,"
         "lgspp,rgspp,gspp\n"
      << '"' << format_one_line(rep.p) << "\"," << to_digit_string(rep.left)
      << ',' << grouping_string(rep.left) << ',' << to_digit_string(rep.right)
      << ',' << grouping_string(rep.right) << ',' << rep.flags.lpp << ','
      << rep.flags.rpp << ',' << rep.flags.pp << ',' << rep.flags.lgspp << ','
      << rep.flags.rgspp << ',' << rep.flags.gspp << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Result cache: census records keyed by a content hash of
// (n, mode, algorithm version).

inline std::string cache_key_hex(int n, Mode mode) {
  const std::string key = "n=" + std::to_string(n) +
                          ";mode=" + to_string(mode) +
                          ";version=" + algorithm_version;
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << h;
  return hex.str();
}

class CensusCache {
public:
  explicit CensusCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path path_for(int n, Mode mode) const {
    return dir_ / ("census-" + cache_key_hex(n, mode) + ".json");
  }

  std::optional<CensusRecord> load(int n, Mode mode) const {
    const auto path = path_for(n, mode);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
      nlohmann::json j;
      in >> j;
      CensusRecord r = j.get<CensusRecord>();
      if (r.n != n || r.mode != mode) return std::nullopt;  // stale key
      return r;
    } catch (const nlohmann::json::exception&) {
      return std::nullopt;  // corrupt entry, recompute
    }
  }

  void store(const CensusRecord& r) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    std::ofstream out(path_for(r.n, r.mode));
    if (out) out << census_json(r);
  }

private:
  std::filesystem::path dir_;
};

}  // namespace palperm
