#include "gensig/combinatorics.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace gensig {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

int triple_rank(int n, int i, int j, int k) {
  if (n < 3 || n > kMaxElements)
    throw std::invalid_argument("triple_rank: n out of range");
  if (!(1 <= i && i < j && j < k && k <= n))
    throw std::invalid_argument("triple_rank: need 1 <= i < j < k <= n");
  // triples before (i,j,k): all with a smaller first element, then smaller
  // second, then smaller third
  std::uint64_t r = 0;
  for (int a = 1; a < i; ++a) r += binomial(n - a, 2);
  for (int b = i + 1; b < j; ++b) r += static_cast<std::uint64_t>(n - b);
  r += static_cast<std::uint64_t>(k - j - 1);
  return static_cast<int>(r);
}

std::array<int, 3> triple_unrank(int n, int rank) {
  if (n < 3 || n > kMaxElements)
    throw std::invalid_argument("triple_unrank: n out of range");
  if (rank < 0 || static_cast<std::uint64_t>(rank) >= binomial(n, 3))
    throw std::invalid_argument("triple_unrank: rank out of range");
  std::uint64_t r = rank;
  int i = 1;
  while (r >= binomial(n - i, 2)) r -= binomial(n - i, 2), ++i;
  int j = i + 1;
  while (r >= static_cast<std::uint64_t>(n - j)) r -= n - j, ++j;
  return {i, j, j + 1 + static_cast<int>(r)};
}

int TripleTable::pair_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  // pairs (i,j), i<j, in lex order
  return (i - 1) * n - (i * (i + 1)) / 2 + (j - i - 1);
}

namespace {

std::unique_ptr<TripleTable> build_table(int n) {
  auto t = std::make_unique<TripleTable>();
  t->n = n;
  t->triple_count = static_cast<int>(binomial(n, 3));
  t->triples.resize(t->triple_count);
  for (int r = 0; r < t->triple_count; ++r) t->triples[r] = triple_unrank(n, r);

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          t->quads.push_back(QuadCheck{
              {i, j, k, l},
              {triple_rank(n, i, j, k), triple_rank(n, i, j, l),
               triple_rank(n, i, k, l), triple_rank(n, j, k, l)}});

  // the four triples of {i<j<k<l} have increasing rank, so a quad is fully
  // assigned exactly when its (j,k,l) triple is
  t->quads_ending_at.resize(t->triple_count);
  for (std::size_t q = 0; q < t->quads.size(); ++q)
    t->quads_ending_at[t->quads[q].ranks[3]].push_back(static_cast<int>(q));

  t->pair_masks.assign(static_cast<std::size_t>(n) * (n - 1) / 2, {});
  for (int r = 0; r < t->triple_count; ++r) {
    const auto [a, b, c] = t->triples[r];
    for (auto [x, y] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}})
      t->pair_masks[t->pair_index(x, y)][r >> 6] |= 1ULL << (63 - (r & 63));
  }

  t->quads_of_pair.resize(t->pair_masks.size());
  for (std::size_t q = 0; q < t->quads.size(); ++q) {
    const auto& e = t->quads[q].elems;
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y)
        t->quads_of_pair[t->pair_index(e[x], e[y])].push_back(static_cast<int>(q));
  }
  return t;
}

}  // namespace

const TripleTable& triple_table(int n) {
  if (n < 3 || n > kMaxElements)
    throw std::invalid_argument("triple_table: n out of range");
  static std::array<std::unique_ptr<TripleTable>, kMaxElements + 1> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[n]) cache[n] = build_table(n);
  return *cache[n];
}

}  // namespace gensig
