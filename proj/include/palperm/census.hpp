#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "palperm/palindromics.hpp"
#include "palperm/permutation.hpp"

namespace palperm {

// 12! is ~479M classifications; beyond that exceeds desk scale.
inline constexpr int census_max_degree = 12;
inline constexpr std::size_t default_witness_cap = 16;

struct ClassCounts {
  std::uint64_t pp_l = 0;
  std::uint64_t pp_r = 0;
  std::uint64_t pp = 0;
  std::uint64_t gspp_l = 0;
  std::uint64_t gspp_r = 0;
  std::uint64_t gspp = 0;

  ClassCounts& operator+=(const ClassCounts& o) {
    pp_l += o.pp_l;
    pp_r += o.pp_r;
    pp += o.pp;
    gspp_l += o.gspp_l;
    gspp_r += o.gspp_r;
    gspp += o.gspp;
    return *this;
  }

  bool operator==(const ClassCounts&) const = default;
};

/// Counts over one rank window [lo, hi) of S_n.
struct PartialCount {
  int n = 0;
  Mode mode = Mode::token;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  ClassCounts counts;
  std::vector<std::vector<int>> neither_witnesses;  // in neither GSP class
  std::uint64_t checksum = 0;                       // permutations visited
};

/// Aggregate over all of S_n.
struct CensusRecord {
  int n = 0;
  Mode mode = Mode::token;
  ClassCounts counts;
  std::uint64_t union_size = 0;  // |GSPP_rho union GSPP_lambda|
  std::vector<std::vector<int>> neither_witnesses;
  std::uint64_t checksum = 0;  // == n!
  double elapsed_seconds = 0.0;
};

/// Field equality ignoring the timing, for determinism checks.
inline bool same_results(const CensusRecord& a, const CensusRecord& b) {
  return a.n == b.n && a.mode == b.mode && a.counts == b.counts &&
         a.union_size == b.union_size &&
         a.neither_witnesses == b.neither_witnesses &&
         a.checksum == b.checksum;
}

namespace detail {

inline void check_census_degree(int n) {
  if (n < 1) throw InputError("invalid degree " + std::to_string(n));
  if (n > census_max_degree)
    throw GuardError("census: degree " + std::to_string(n) + " exceeds cap " +
                     std::to_string(census_max_degree));
}

}  // namespace detail

/// Classifies exactly the permutations with ranks in [lo, hi). The inner
/// loop steps one-line forms in place and classifies out of fixed buffers;
/// nothing is allocated per permutation.
inline PartialCount census_range(int n, Mode mode, std::uint64_t lo,
                                 std::uint64_t hi,
                                 std::size_t witness_cap = default_witness_cap) {
  detail::check_census_degree(n);
  PartialCount part;
  part.n = n;
  part.mode = mode;
  part.lo = lo;
  part.hi = hi;
  Classifier classify_in(mode);
  enumerate_range(n, lo, hi, [&](std::span<const int> images) {
    const ClassFlags f = classify_in(images);
    part.counts.pp_l += f.lpp;
    part.counts.pp_r += f.rpp;
    part.counts.pp += f.pp;
    part.counts.gspp_l += f.lgspp;
    part.counts.gspp_r += f.rgspp;
    part.counts.gspp += f.gspp;
    if (!f.lgspp && !f.rgspp && part.neither_witnesses.size() < witness_cap)
      part.neither_witnesses.emplace_back(images.begin(), images.end());
    ++part.checksum;
  });
  return part;
}

/// Merges window counts into a full record. The windows must tile [0, n!)
/// exactly; witnesses are concatenated in rank order up to the cap.
inline CensusRecord merge(std::vector<PartialCount> parts,
                          std::size_t witness_cap = default_witness_cap) {
  if (parts.empty()) throw InputError("merge: no partial counts");
  const int n = parts.front().n;
  const Mode mode = parts.front().mode;
  for (const auto& p : parts)
    if (p.n != n || p.mode != mode)
      throw InputError("merge: mixed degrees or modes");
  std::sort(parts.begin(), parts.end(),
            [](const PartialCount& a, const PartialCount& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  const std::uint64_t total = factorial(n);
  std::uint64_t expected_lo = 0;
  for (const auto& p : parts) {
    if (p.lo != expected_lo)
      throw InputError("merge: tiling error at rank " + std::to_string(p.lo) +
                       (p.lo < expected_lo ? " (overlap)" : " (gap)"));
    if (p.hi < p.lo || p.hi > total)
      throw InputError("merge: window [" + std::to_string(p.lo) + ", " +
                       std::to_string(p.hi) + ") out of bounds");
    expected_lo = p.hi;
  }
  if (expected_lo != total)
    throw InputError("merge: tiling error, windows end at " +
                     std::to_string(expected_lo) + " instead of " +
                     std::to_string(total));
  CensusRecord record;
  record.n = n;
  record.mode = mode;
  for (const auto& p : parts) {
    record.counts += p.counts;
    record.checksum += p.checksum;
    for (const auto& w : p.neither_witnesses) {
      if (record.neither_witnesses.size() >= witness_cap) break;
      record.neither_witnesses.push_back(w);
    }
  }
  record.union_size =
      record.counts.gspp_l + record.counts.gspp_r - record.counts.gspp;
  return record;
}

/// Full census of S_n: partitions [0, n!) into near-equal rank windows, one
/// per worker, and merges. The result does not depend on the worker count.
inline CensusRecord census(int n, Mode mode = Mode::token, int workers = 1,
                           std::size_t witness_cap = default_witness_cap) {
  detail::check_census_degree(n);
  if (workers < 1)
    throw InputError("census: worker count must be positive");
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = factorial(n);
  const auto w = static_cast<std::uint64_t>(workers) < total
                     ? static_cast<std::uint64_t>(workers)
                     : total;
  CensusRecord record;
  if (w <= 1 || total < 10'000) {
    record = merge({census_range(n, mode, 0, total, witness_cap)}, witness_cap);
  } else {
    std::vector<PartialCount> parts(w);
    std::vector<std::exception_ptr> errors(w);
    std::vector<std::thread> pool;
    pool.reserve(w);
    const std::uint64_t base = total / w;
    const std::uint64_t extra = total % w;
    std::uint64_t lo = 0;
    for (std::uint64_t i = 0; i < w; ++i) {
      const std::uint64_t hi = lo + base + (i < extra ? 1 : 0);
      pool.emplace_back([&, i, lo, hi] {
        try {
          parts[i] = census_range(n, mode, lo, hi, witness_cap);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
      lo = hi;
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
    record = merge(std::move(parts), witness_cap);
  }
  record.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return record;
}

struct InclusionExclusion {
  bool holds = false;
  std::uint64_t residual = 0;  // permutations in neither GSP class
};

/// |GSPP_rho| + |GSPP_lambda| - |GSPP| = n! holds iff every permutation is
/// at least a RGSPP or a LGSPP; the residual counts the ones that are
/// neither.
inline InclusionExclusion check_inclusion_exclusion(const CensusRecord& r) {
  const std::uint64_t total = factorial(r.n);
  InclusionExclusion result;
  result.residual = total - r.union_size;
  result.holds = result.residual == 0;
  return result;
}

}  // namespace palperm
