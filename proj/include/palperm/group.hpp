#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "palperm/palindromics.hpp"
#include "palperm/permutation.hpp"

namespace palperm {

inline constexpr std::uint64_t closure_element_cap = 10'000'000;

/// The subgroup generated by a set of permutations: element set (sorted in
/// rank order), the generators that produced it, and its order.
struct GroupClosure {
  int n = 0;
  std::vector<Permutation> elements;
  std::vector<Permutation> generators;

  std::uint64_t order() const { return elements.size(); }

  bool contains(const Permutation& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
  }
};

/// Breadth-first closure: multiply queued elements by the generators on the
/// right until nothing new appears. Starts from the identity, so the result
/// always contains it.
inline GroupClosure closure(int n, std::span<const Permutation> generators) {
  for (const auto& g : generators)
    if (g.degree() != n)
      throw InputError("closure: generator of degree " +
                       std::to_string(g.degree()) + " in S_" +
                       std::to_string(n));
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> todo;
  const Permutation id = Permutation::identity(n);
  seen.insert(id);
  todo.push_back(id);
  while (!todo.empty()) {
    const Permutation current = std::move(todo.front());
    todo.pop_front();
    for (const auto& g : generators) {
      Permutation next = compose(current, g);
      if (seen.insert(next).second) {
        if (seen.size() > closure_element_cap)
          throw GuardError("closure: more than " +
                           std::to_string(closure_element_cap) + " elements");
        todo.push_back(std::move(next));
      }
    }
  }
  GroupClosure result;
  result.n = n;
  result.generators.assign(generators.begin(), generators.end());
  result.elements.assign(seen.begin(), seen.end());
  std::sort(result.elements.begin(), result.elements.end());
  return result;
}

/// The rotation/reflection pair generating the dihedral group of order 2n:
/// sigma = (1 2 ... n) as the n-cycle [2,3,...,n,1], tau = [1,n,n-1,...,2].
inline std::pair<Permutation, Permutation> dihedral_generators(int n) {
  if (n < 3)
    throw InputError("dihedral_generators: invalid degree " +
                     std::to_string(n) + " (need n >= 3)");
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::vector<int> tau(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    sigma[static_cast<std::size_t>(i)] = i + 1 < n ? i + 2 : 1;
    tau[static_cast<std::size_t>(i)] = i == 0 ? 1 : n + 1 - i;
  }
  return {Permutation::from_one_line(std::move(sigma)),
          Permutation::from_one_line(std::move(tau))};
}

/// Checks on the dihedral generators of S_n. The four verdicts are computed
/// independently of one another.
struct DihedralReport {
  int n = 0;
  std::uint64_t order = 0;
  bool order_ok = false;      // |<sigma, tau>| == 2n
  bool relations_ok = false;  // sigma^n = e = tau^2 and tau sigma = sigma^(n-1) tau
  bool sigma_rgspp = false;
  bool tau_lgspp = false;

  bool all_ok() const {
    return order_ok && relations_ok && sigma_rgspp && tau_lgspp;
  }
};

inline DihedralReport verify_dihedral(int n) {
  const auto [sigma, tau] = dihedral_generators(n);
  DihedralReport report;
  report.n = n;
  const std::vector<Permutation> gens{sigma, tau};
  const GroupClosure cl = closure(n, gens);
  report.order = cl.order();
  report.order_ok = cl.order() == 2 * static_cast<std::uint64_t>(n);
  const Permutation id = Permutation::identity(n);
  report.relations_ok =
      power(sigma, static_cast<std::uint64_t>(n)) == id &&
      compose(tau, tau) == id &&
      compose(tau, sigma) ==
          compose(power(sigma, static_cast<std::uint64_t>(n - 1)), tau);
  report.sigma_rgspp = classify(sigma).rgspp;
  report.tau_lgspp = classify(tau).lgspp;
  return report;
}

enum class PalinClass { lpp, rpp, lgspp, rgspp };

inline const char* to_string(PalinClass c) {
  switch (c) {
    case PalinClass::lpp: return "lpp";
    case PalinClass::rpp: return "rpp";
    case PalinClass::lgspp: return "lgspp";
    case PalinClass::rgspp: return "rgspp";
  }
  return "?";
}

inline PalinClass palin_class_from_string(const std::string& s) {
  if (s == "lpp") return PalinClass::lpp;
  if (s == "rpp") return PalinClass::rpp;
  if (s == "lgspp") return PalinClass::lgspp;
  if (s == "rgspp") return PalinClass::rgspp;
  throw InputError("unknown class '" + s +
                   "' (expected lpp, rpp, lgspp or rgspp)");
}

inline bool flag_of(const ClassFlags& f, PalinClass c) {
  switch (c) {
    case PalinClass::lpp: return f.lpp;
    case PalinClass::rpp: return f.rpp;
    case PalinClass::lgspp: return f.lgspp;
    case PalinClass::rgspp: return f.rgspp;
  }
  return false;
}

struct InverseClosureReport {
  int n = 0;
  PalinClass palin_class = PalinClass::lpp;
  bool holds = false;
  std::vector<Permutation> counterexamples;
};

/// Exhaustive sweep of S_n checking that membership in the class is
/// preserved under inversion. Expected to hold; counterexamples are listed
/// if it ever does not.
inline InverseClosureReport verify_inverse_closure(int n, PalinClass cls,
                                                   Mode mode = Mode::token) {
  if (n < 1) throw InputError("invalid degree " + std::to_string(n));
  if (n > 9)
    throw GuardError("verify_inverse_closure: degree " + std::to_string(n) +
                     " exceeds exhaustive-sweep cap 9");
  InverseClosureReport report;
  report.n = n;
  report.palin_class = cls;
  Classifier classify_in(mode);
  enumerate_range(n, 0, factorial(n), [&](std::span<const int> images) {
    const Permutation p =
        Permutation::from_one_line(std::vector<int>(images.begin(), images.end()));
    const Permutation q = inverse(p);
    if (flag_of(classify_in(p.images()), cls) !=
        flag_of(classify_in(q.images()), cls))
      report.counterexamples.push_back(p);
  });
  report.holds = report.counterexamples.empty();
  return report;
}

/// The Klein four-group inside S_4: identity, the double transpositions
/// [3,4,1,2], [2,1,4,3] and the reversal [4,3,2,1].
inline std::vector<Permutation> klein_four() {
  return {Permutation::from_one_line({1, 2, 3, 4}),
          Permutation::from_one_line({3, 4, 1, 2}),
          Permutation::from_one_line({2, 1, 4, 3}),
          Permutation::from_one_line({4, 3, 2, 1})};
}

}  // namespace palperm
