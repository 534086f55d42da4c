#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "palperm/census.hpp"
#include "palperm/permutation.hpp"

namespace palperm::testing {

inline std::vector<Permutation> all_perms(int n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  enumerate_range(n, 0, factorial(n), [&](std::span<const int> img) {
    out.push_back(
        Permutation::from_one_line(std::vector<int>(img.begin(), img.end())));
  });
  return out;
}

inline Permutation random_perm(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, factorial(n) - 1);
  return unrank(n, dist(rng));
}

inline std::vector<int> random_tokens(std::size_t max_len, int alphabet,
                                      std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
  std::uniform_int_distribution<int> tok_dist(1, alphabet);
  std::vector<int> t(len_dist(rng));
  for (auto& v : t) v = tok_dist(rng);
  return t;
}

/// Single-loop census over the brute-force recognizer; the independent
/// route that the fast census is checked against.
inline ClassCounts oracle_census_counts(int n) {
  ClassCounts c;
  enumerate_range(n, 0, factorial(n), [&](std::span<const int> img) {
    const Permutation p =
        Permutation::from_one_line(std::vector<int>(img.begin(), img.end()));
    const TokenSeq l = lpv(p);
    const TokenSeq r = rpv(p);
    const bool lpp = is_palindrome(l);
    const bool rpp = is_palindrome(r);
    const bool lg = is_gsp_oracle(l);
    const bool rg = is_gsp_oracle(r);
    c.pp_l += lpp;
    c.pp_r += rpp;
    c.pp += lpp && rpp;
    c.gspp_l += lg;
    c.gspp_r += rg;
    c.gspp += lg && rg;
  });
  return c;
}

}  // namespace palperm::testing
