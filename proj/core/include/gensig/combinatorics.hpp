#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace gensig {

// Elements are labeled 1..n. The hard cap keeps every triple rank inside a
// fixed-width integer and every sign vector inside a fixed word array.
inline constexpr int kMaxElements = 16;
inline constexpr int kMaxTriples = 560;  // C(16,3)

std::uint64_t binomial(int n, int k);

// 0-based position of the sorted triple (i,j,k) among all sorted triples of
// {1..n} in lexicographic order. Requires 1 <= i < j < k <= n.
int triple_rank(int n, int i, int j, int k);

// Inverse of triple_rank.
std::array<int, 3> triple_unrank(int n, int rank);

struct QuadCheck {
  std::array<int, 4> elems;   // i < j < k < l
  std::array<int, 4> ranks;   // ranks of (ijk), (ijl), (ikl), (jkl)
};

// Precomputed per-n lookup tables shared by validation, enumeration and the
// flip machinery. Immutable once built.
struct TripleTable {
  int n = 0;
  int triple_count = 0;
  std::vector<std::array<int, 3>> triples;        // rank -> sorted triple
  std::vector<QuadCheck> quads;                   // in lex order of elems
  std::vector<std::vector<int>> quads_ending_at;  // quad indices whose max rank is r
  // flip mask per unordered pair: bit positions (MSB-first layout, see
  // signotope.hpp) of all triples containing both elements of the pair
  std::vector<std::array<std::uint64_t, 9>> pair_masks;  // index pair_index(i,j)
  std::vector<std::vector<int>> quads_of_pair;           // quads containing both
  int pair_index(int i, int j) const;                    // i != j, unordered
};

const TripleTable& triple_table(int n);

}  // namespace gensig
