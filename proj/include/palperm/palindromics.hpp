#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "palperm/permutation.hpp"

namespace palperm {

/// A palindromic value as a sequence of symbols. For a permutation of
/// degree n the left/right values have exactly 2n tokens.
using TokenSeq = std::vector<int>;

/// Token mode treats each symbol 1..n as atomic; digit mode re-reads the
/// value as its decimal digit string. The two coincide for n <= 9.
enum class Mode { token, digit };

inline const char* to_string(Mode m) {
  return m == Mode::token ? "token" : "digit";
}

inline Mode mode_from_string(const std::string& s) {
  if (s == "token") return Mode::token;
  if (s == "digit") return Mode::digit;
  throw InputError("unknown mode '" + s + "' (expected token or digit)");
}

/// Left palindromic value: 1 2 .. n sigma(n) .. sigma(1).
inline TokenSeq lpv(const Permutation& p) {
  const int n = p.degree();
  TokenSeq t(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    t[static_cast<std::size_t>(i)] = i + 1;
    t[static_cast<std::size_t>(n + i)] = p(n - i);
  }
  return t;
}

/// Right palindromic value: 1 2 .. n sigma(1) .. sigma(n).
inline TokenSeq rpv(const Permutation& p) {
  const int n = p.degree();
  TokenSeq t(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    t[static_cast<std::size_t>(i)] = i + 1;
    t[static_cast<std::size_t>(n + i)] = p(i + 1);
  }
  return t;
}

inline bool is_palindrome(std::span<const int> t) {
  if (t.empty()) throw InputError("is_palindrome: empty sequence");
  for (std::size_t i = 0, j = t.size() - 1; i < j; ++i, --j)
    if (t[i] != t[j]) return false;
  return true;
}

/// Generalized Smarandache palindrome test via the prefix-suffix criterion:
/// a sequence of length m >= 2 splits into a block palindrome of at least
/// two blocks iff some length-l prefix equals the length-l suffix with
/// 2l <= m. Length-1 sequences are palindromes, hence GSPs.
inline bool is_gsp(std::span<const int> t) {
  if (t.empty()) throw InputError("is_gsp: empty sequence");
  const std::size_t m = t.size();
  if (m == 1) return true;
  for (std::size_t l = 1; 2 * l <= m; ++l)
    if (std::equal(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(l),
                   t.end() - static_cast<std::ptrdiff_t>(l)))
      return true;
  return false;
}

/// Brute-force GSP recognizer: tries every split into k >= 2 blocks (all
/// 2^(m-1) - 1 cut patterns) and tests the mirror condition block by block.
/// Deliberately ignorant of the prefix-suffix shortcut; exists to
/// cross-check is_gsp.
inline bool is_gsp_oracle(std::span<const int> t) {
  if (t.empty()) throw InputError("is_gsp_oracle: empty sequence");
  const int m = static_cast<int>(t.size());
  if (m > 24)
    throw GuardError("is_gsp_oracle: sequence of " + std::to_string(m) +
                     " tokens exceeds cap 24");
  if (m == 1) return true;
  std::array<int, 26> bounds{};
  const std::uint32_t patterns = 1u << (m - 1);
  for (std::uint32_t cuts = 1; cuts < patterns; ++cuts) {
    int k = 0;
    bounds[static_cast<std::size_t>(k++)] = 0;
    for (int i = 0; i < m - 1; ++i)
      if (cuts >> i & 1u) bounds[static_cast<std::size_t>(k++)] = i + 1;
    bounds[static_cast<std::size_t>(k)] = m;
    bool mirror = true;
    for (int a = 0, b = k - 1; a < b && mirror; ++a, --b) {
      const int la = bounds[static_cast<std::size_t>(a) + 1] - bounds[static_cast<std::size_t>(a)];
      const int lb = bounds[static_cast<std::size_t>(b) + 1] - bounds[static_cast<std::size_t>(b)];
      mirror = la == lb &&
               std::equal(t.begin() + bounds[static_cast<std::size_t>(a)],
                          t.begin() + bounds[static_cast<std::size_t>(a) + 1],
                          t.begin() + bounds[static_cast<std::size_t>(b)]);
    }
    if (mirror) return true;
  }
  return false;
}

/// Blocks b_1..b_k whose concatenation is the source sequence and with
/// b_i = b_{k+1-i}; k may be 1 only when the source is a palindrome.
struct BlockPartition {
  std::vector<std::vector<int>> blocks;

  bool operator==(const BlockPartition&) const = default;
};

/// Canonical witness: repeatedly peel the shortest equal prefix/suffix pair
/// from the outside in, which maximizes the block count. Palindromes peel
/// all the way down to singletons. Empty when the sequence is not a GSP.
inline std::optional<BlockPartition> gsp_witness(std::span<const int> t) {
  if (t.empty()) throw InputError("gsp_witness: empty sequence");
  std::size_t lo = 0, hi = t.size();
  std::vector<std::vector<int>> front, back;
  while (hi - lo >= 2) {
    std::size_t peel = 0;
    for (std::size_t l = 1; 2 * l <= hi - lo; ++l) {
      if (std::equal(t.begin() + static_cast<std::ptrdiff_t>(lo),
                     t.begin() + static_cast<std::ptrdiff_t>(lo + l),
                     t.begin() + static_cast<std::ptrdiff_t>(hi - l))) {
        peel = l;
        break;
      }
    }
    if (peel == 0) break;
    front.emplace_back(t.begin() + static_cast<std::ptrdiff_t>(lo),
                       t.begin() + static_cast<std::ptrdiff_t>(lo + peel));
    back.emplace_back(t.begin() + static_cast<std::ptrdiff_t>(hi - peel),
                      t.begin() + static_cast<std::ptrdiff_t>(hi));
    lo += peel;
    hi -= peel;
  }
  BlockPartition part;
  part.blocks.reserve(front.size() * 2 + 1);
  for (auto& b : front) part.blocks.push_back(std::move(b));
  if (lo < hi)
    part.blocks.emplace_back(t.begin() + static_cast<std::ptrdiff_t>(lo),
                             t.begin() + static_cast<std::ptrdiff_t>(hi));
  for (auto it = back.rbegin(); it != back.rend(); ++it)
    part.blocks.push_back(std::move(*it));
  if (part.blocks.size() < 2 && !is_palindrome(t)) return std::nullopt;
  return part;
}

/// Decimal re-reading of a token sequence: concatenated base-10 expansions.
inline std::string to_digit_string(std::span<const int> t) {
  std::string out;
  for (int v : t) out += std::to_string(v);
  return out;
}

/// The same re-reading as individual digit tokens.
inline TokenSeq to_digit_tokens(std::span<const int> t) {
  TokenSeq digits;
  digits.reserve(t.size() * 2);
  for (int v : t) {
    const std::string s = std::to_string(v);
    for (char c : s) digits.push_back(c - '0');
  }
  return digits;
}

/// Membership in the six classes for one permutation.
struct ClassFlags {
  bool lpp = false;
  bool rpp = false;
  bool pp = false;
  bool lgspp = false;
  bool rgspp = false;
  bool gspp = false;

  bool operator==(const ClassFlags&) const = default;
};

/// Reusable classification kernel with fixed buffers sized for the degree
/// cap; the census inner loop calls this without any heap allocation.
class Classifier {
public:
  explicit Classifier(Mode mode = Mode::token) : mode_(mode) {}

  Mode mode() const { return mode_; }

  ClassFlags operator()(std::span<const int> images) {
    const int n = static_cast<int>(images.size());
    int m = 0;
    if (mode_ == Mode::token) {
      for (int i = 0; i < n; ++i) {
        left_[static_cast<std::size_t>(i)] = i + 1;
        right_[static_cast<std::size_t>(i)] = i + 1;
        right_[static_cast<std::size_t>(n + i)] = images[static_cast<std::size_t>(i)];
        left_[static_cast<std::size_t>(n + i)] = images[static_cast<std::size_t>(n - 1 - i)];
      }
      m = 2 * n;
    } else {
      int li = 0, ri = 0;
      for (int i = 1; i <= n; ++i) {
        push_digits(left_, li, i);
        push_digits(right_, ri, i);
      }
      for (int i = 0; i < n; ++i) {
        push_digits(right_, ri, images[static_cast<std::size_t>(i)]);
        push_digits(left_, li, images[static_cast<std::size_t>(n - 1 - i)]);
      }
      m = li;  // ri == li: same multiset of tokens
    }
    const std::span<const int> l(left_.data(), static_cast<std::size_t>(m));
    const std::span<const int> r(right_.data(), static_cast<std::size_t>(m));
    ClassFlags f;
    f.lpp = is_palindrome(l);
    f.rpp = is_palindrome(r);
    f.lgspp = is_gsp(l);
    f.rgspp = is_gsp(r);
    f.pp = f.lpp && f.rpp;
    f.gspp = f.lgspp && f.rgspp;
    return f;
  }

private:
  static void push_digits(std::array<int, 4 * max_degree>& buf, int& idx, int v) {
    if (v >= 10) buf[static_cast<std::size_t>(idx++)] = v / 10;
    buf[static_cast<std::size_t>(idx++)] = v % 10;
  }

  Mode mode_;
  std::array<int, 4 * max_degree> left_{};
  std::array<int, 4 * max_degree> right_{};
};

inline ClassFlags classify(const Permutation& p, Mode mode = Mode::token) {
  Classifier c(mode);
  return c(p.images());
}

/// Rendering of a block partition: singleton blocks bare, longer blocks
/// parenthesized, e.g. "1(23)(23)1".
inline std::string format_blocks(const BlockPartition& part) {
  std::string out;
  for (const auto& block : part.blocks) {
    const bool wrap = block.size() > 1;
    if (wrap) out += '(';
    out += to_digit_string(block);
    if (wrap) out += ')';
  }
  return out;
}

/// Display grouping in the style of the worked tables: palindromes and
/// non-GSPs print bare; other GSPs print the outside-in peeling, keeping a
/// palindromic middle whole, e.g. 123312 -> "(12)(33)(12)".
inline std::string grouping_string(std::span<const int> t) {
  if (is_palindrome(t) || !is_gsp(t)) return to_digit_string(t);
  std::size_t lo = 0, hi = t.size();
  BlockPartition part;
  std::vector<std::vector<int>> back;
  while (lo < hi) {
    const auto middle = t.subspan(lo, hi - lo);
    if (is_palindrome(middle)) {
      part.blocks.emplace_back(middle.begin(), middle.end());
      break;
    }
    std::size_t peel = 0;
    for (std::size_t l = 1; 2 * l <= hi - lo; ++l) {
      if (std::equal(t.begin() + static_cast<std::ptrdiff_t>(lo),
                     t.begin() + static_cast<std::ptrdiff_t>(lo + l),
                     t.begin() + static_cast<std::ptrdiff_t>(hi - l))) {
        peel = l;
        break;
      }
    }
    if (peel == 0) {  // irreducible middle, keep as one block
      part.blocks.emplace_back(middle.begin(), middle.end());
      break;
    }
    part.blocks.emplace_back(t.begin() + static_cast<std::ptrdiff_t>(lo),
                             t.begin() + static_cast<std::ptrdiff_t>(lo + peel));
    back.emplace_back(t.begin() + static_cast<std::ptrdiff_t>(hi - peel),
                      t.begin() + static_cast<std::ptrdiff_t>(hi));
    lo += peel;
    hi -= peel;
  }
  for (auto it = back.rbegin(); it != back.rend(); ++it)
    part.blocks.push_back(std::move(*it));
  return format_blocks(part);
}

}  // namespace palperm
