#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "gensig/combinatorics.hpp"
#include "gensig/permutation.hpp"
#include "gensig/sign.hpp"

namespace gensig {

// Lex-first 4-subset whose sign sequence hits one of the forbidden
// alternating patterns, together with that sequence.
struct Violation {
  std::array<int, 4> subset;    // i < j < k < l
  std::array<Sign, 4> pattern;  // chi(ijk), chi(ijl), chi(ikl), chi(jkl)
  bool operator==(const Violation&) const = default;
};

// An alternating sign map on triples of {1..n} avoiding the patterns +-+-
// and -+-+ on every sorted 4-subset. One sign is stored per sorted triple,
// packed MSB-first so that numeric comparison of the words equals
// lexicographic comparison of the sign string with Minus < Plus.
class Signotope {
 public:
  static constexpr int kWords = (kMaxTriples + 63) / 64;
  using Words = std::array<std::uint64_t, kWords>;

  // Checks every sorted 4-subset; returns the signotope or the lex-first
  // violation. Throws std::invalid_argument on wrong length or n out of range.
  static std::variant<Signotope, Violation> validate(int n,
                                                     std::span<const Sign> signs);
  // Like validate but throws std::invalid_argument on a violation.
  static Signotope from_signs(int n, std::span<const Sign> signs);
  static Signotope all_plus(int n);
  static Signotope all_minus(int n);

  int n() const { return n_; }
  int triple_count() const { return triple_table(n_).triple_count; }

  Sign stored(int rank) const {
    return static_cast<Sign>((bits_[rank >> 6] >> (63 - (rank & 63))) & 1u);
  }
  // Alternating extension: sign of the sorting permutation times the stored
  // sign of the sorted triple. Elements must be pairwise distinct.
  Sign chi(int a, int b, int c) const;

  Signotope negated() const;
  // chi'(p(a), p(b), p(c)) = chi(a, b, c)
  Signotope relabeled(const Permutation& p) const;
  // Induced sub-signotope on a sorted subset of {1..n}, elements renamed to
  // 1..k preserving order. Subset size must be >= 3.
  Signotope restricted_to(std::span<const int> elements) const;

  std::vector<Sign> signs() const;
  const Words& words() const { return bits_; }

  bool operator==(const Signotope& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }
  // Orders by n, then lexicographically by sign string (Minus < Plus).
  bool operator<(const Signotope& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return bits_ < o.bits_;
  }

  struct Raw;  // enumeration frontier; bypasses the 4-subset check

 private:
  Signotope(int n, const Words& w) : n_(n), bits_(w) {}

  int n_ = 0;
  Words bits_{};
};

struct Signotope::Raw {
  // Callers guarantee the word array encodes a pattern-free sign vector
  // whose unused bits are zero.
  static Signotope wrap(int n, const Words& w) { return Signotope(n, w); }
};

// Shared low-level check: true iff the four signs at the quad's ranks avoid
// +-+- and -+-+.
inline bool quad_ok(const Signotope::Words& bits, const QuadCheck& q) {
  const auto bit = [&](int r) -> unsigned {
    return (bits[r >> 6] >> (63 - (r & 63))) & 1u;
  };
  const unsigned b0 = bit(q.ranks[0]), b1 = bit(q.ranks[1]);
  const unsigned b2 = bit(q.ranks[2]), b3 = bit(q.ranks[3]);
  return !(b0 == b2 && b1 == b3 && b0 != b1);
}

}  // namespace gensig

template <>
struct std::hash<gensig::Signotope> {
  std::size_t operator()(const gensig::Signotope& s) const noexcept {
    std::size_t h = std::hash<int>{}(s.n());
    for (auto w : s.words()) h = h * 1099511628211ULL + std::hash<std::uint64_t>{}(w);
    return h;
  }
};
