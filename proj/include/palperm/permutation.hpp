#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace palperm {

// Degrees above 20 would overflow 64-bit factorials.
inline constexpr int max_degree = 20;

/// Malformed input: broken one-line forms, bad cycles, out-of-range ranks.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A size guard tripped: degree cap, closure cap, oracle length cap.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::array<std::uint64_t, max_degree + 1> factorials = [] {
  std::array<std::uint64_t, max_degree + 1> f{};
  f[0] = 1;
  for (int i = 1; i <= max_degree; ++i)
    f[i] = f[i - 1] * static_cast<std::uint64_t>(i);
  return f;
}();

inline std::uint64_t factorial(int n) {
  if (n < 0 || n > max_degree)
    throw GuardError("factorial: degree " + std::to_string(n) +
                     " outside 0.." + std::to_string(max_degree));
  return factorials[static_cast<std::size_t>(n)];
}

/// Disjoint-cycle form; length-1 cycles are accepted on input and
/// suppressed on output.
using CycleList = std::vector<std::vector<int>>;

/// A bijection of {1..n} in one-line form: images()[i] = sigma(i+1).
/// Values are 1-based, positions 0-based. Immutable once constructed.
class Permutation {
public:
  Permutation() : images_{1} {}

  static Permutation identity(int n) {
    check_degree(n);
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img), Unchecked{});
  }

  /// [n, n-1, ..., 1]; the unique permutation whose right palindromic
  /// value is a palindrome.
  static Permutation reversal(int n) {
    check_degree(n);
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.rbegin(), img.rend(), 1);
    return Permutation(std::move(img), Unchecked{});
  }

  static Permutation from_one_line(std::vector<int> images) {
    if (images.empty())
      throw InputError("one-line form must be non-empty");
    if (static_cast<int>(images.size()) > max_degree)
      throw GuardError("degree " + std::to_string(images.size()) +
                       " exceeds cap " + std::to_string(max_degree));
    const int n = static_cast<int>(images.size());
    std::vector<int> seen_at(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
      const int v = images[static_cast<std::size_t>(i)];
      if (v < 1 || v > n)
        throw InputError("not a bijection: value " + std::to_string(v) +
                         " at position " + std::to_string(i + 1) +
                         " is outside 1.." + std::to_string(n));
      if (seen_at[static_cast<std::size_t>(v)] != 0)
        throw InputError("not a bijection: value " + std::to_string(v) +
                         " at position " + std::to_string(i + 1) +
                         " already appeared at position " +
                         std::to_string(seen_at[static_cast<std::size_t>(v)]));
      seen_at[static_cast<std::size_t>(v)] = i + 1;
    }
    return Permutation(std::move(images), Unchecked{});
  }

  /// sigma(x_i) = x_{i+1}, sigma(x_r) = x_1, fixed points elsewhere.
  static Permutation from_cycles(int n, const CycleList& cycles) {
    check_degree(n);
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (const auto& cycle : cycles) {
      if (cycle.empty())
        throw InputError("invalid cycle: empty cycle");
      for (int x : cycle) {
        if (x < 1 || x > n)
          throw InputError("invalid cycle: entry " + std::to_string(x) +
                           " is outside 1.." + std::to_string(n));
        if (used[static_cast<std::size_t>(x)])
          throw InputError("invalid cycle: entry " + std::to_string(x) +
                           " repeated");
        used[static_cast<std::size_t>(x)] = true;
      }
      const std::size_t r = cycle.size();
      for (std::size_t i = 0; i + 1 < r; ++i)
        img[static_cast<std::size_t>(cycle[i]) - 1] = cycle[i + 1];
      img[static_cast<std::size_t>(cycle[r - 1]) - 1] = cycle[0];
    }
    return Permutation(std::move(img), Unchecked{});
  }

  int degree() const { return static_cast<int>(images_.size()); }

  /// Apply to a point, 1-based.
  int operator()(int x) const { return images_[static_cast<std::size_t>(x) - 1]; }

  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic on one-line forms, i.e. rank order.
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

  friend Permutation compose(const Permutation& a, const Permutation& b);
  friend Permutation inverse(const Permutation& p);
  friend Permutation unrank(int n, std::uint64_t k);

private:
  struct Unchecked {};
  Permutation(std::vector<int> img, Unchecked) : images_(std::move(img)) {}

  static void check_degree(int n) {
    if (n < 1)
      throw InputError("invalid degree " + std::to_string(n));
    if (n > max_degree)
      throw GuardError("degree " + std::to_string(n) + " exceeds cap " +
                       std::to_string(max_degree));
  }

  std::vector<int> images_;
};

/// c = a after b: c(x) = a(b(x)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw InputError("compose: degree mismatch " + std::to_string(a.degree()) +
                     " vs " + std::to_string(b.degree()));
  const int n = a.degree();
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    img[static_cast<std::size_t>(i)] = a(b(i + 1));
  return Permutation(std::move(img), Permutation::Unchecked{});
}

inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}

inline Permutation inverse(const Permutation& p) {
  const int n = p.degree();
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    img[static_cast<std::size_t>(p(i + 1)) - 1] = i + 1;
  return Permutation(std::move(img), Permutation::Unchecked{});
}

inline Permutation power(const Permutation& p, std::uint64_t e) {
  Permutation acc = Permutation::identity(p.degree());
  Permutation base = p;
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

/// Lexicographic rank of the one-line form, in [0, n!-1]. Lehmer code.
inline std::uint64_t rank(const Permutation& p) {
  const auto& img = p.images();
  const int n = p.degree();
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < n; ++j)
      if (img[static_cast<std::size_t>(j)] < img[static_cast<std::size_t>(i)])
        ++smaller_after;
    r += static_cast<std::uint64_t>(smaller_after) *
         factorials[static_cast<std::size_t>(n - 1 - i)];
  }
  return r;
}

inline Permutation unrank(int n, std::uint64_t k) {
  Permutation::check_degree(n);
  if (k >= factorials[static_cast<std::size_t>(n)])
    throw InputError("unrank: rank " + std::to_string(k) +
                     " out of range for degree " + std::to_string(n));
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> img;
  img.reserve(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const std::uint64_t f = factorials[static_cast<std::size_t>(i)];
    const auto idx = static_cast<std::ptrdiff_t>(k / f);
    k %= f;
    img.push_back(pool[static_cast<std::size_t>(idx)]);
    pool.erase(pool.begin() + idx);
  }
  return Permutation(std::move(img), Permutation::Unchecked{});
}

/// Streams the one-line forms with ranks in [lo, hi), in rank order: one
/// unrank, then in-place lexicographic successor stepping. The span handed
/// to the sink is valid only for the duration of the call.
template <typename Sink>
void enumerate_range(int n, std::uint64_t lo, std::uint64_t hi, Sink&& sink) {
  const std::uint64_t total = factorial(n);
  if (n < 1) throw InputError("invalid degree " + std::to_string(n));
  if (lo > hi || hi > total)
    throw InputError("enumerate_range: window [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + ") not inside [0, " +
                     std::to_string(total) + ")");
  if (lo == hi) return;
  std::vector<int> buf = unrank(n, lo).images();
  for (std::uint64_t r = lo; r < hi; ++r) {
    sink(std::span<const int>(buf));
    if (r + 1 < hi) std::next_permutation(buf.begin(), buf.end());
  }
}

/// Canonical cycles: each rotated to start at its minimum, sorted by
/// minimum, fixed points suppressed.
inline CycleList to_cycles(const Permutation& p) {
  const int n = p.degree();
  CycleList cycles;
  std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
  for (int x = 1; x <= n; ++x) {
    if (visited[static_cast<std::size_t>(x)] || p(x) == x) continue;
    std::vector<int> cycle;
    for (int y = x; !visited[static_cast<std::size_t>(y)]; y = p(y)) {
      visited[static_cast<std::size_t>(y)] = true;
      cycle.push_back(y);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

inline std::string format_one_line(const Permutation& p) {
  std::string out;
  for (int i = 0; i < p.degree(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p(i + 1));
  }
  return out;
}

inline std::string format_cycles(const CycleList& cycles) {
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

/// Two-row rendering, top row 1..n, bottom row the images.
inline std::string format_two_row(const Permutation& p) {
  const int n = p.degree();
  const std::size_t width = std::to_string(n).size();
  auto pad = [width](int v) {
    std::string s = std::to_string(v);
    return std::string(width - s.size(), ' ') + s;
  };
  std::string top = "(";
  std::string bottom = "(";
  for (int i = 1; i <= n; ++i) {
    top += ' ' + pad(i);
    bottom += ' ' + pad(p(i));
  }
  top += " )";
  bottom += " )";
  return top + '\n' + bottom;
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    // FNV-1a over the one-line form
    std::uint64_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace palperm

template <>
struct std::hash<palperm::Permutation> {
  std::size_t operator()(const palperm::Permutation& p) const {
    return palperm::PermutationHash{}(p);
  }
};
