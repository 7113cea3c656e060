#include "gensig/enumerate.hpp"

#include <vector>

#include "gensig/parallel.hpp"

namespace gensig {

namespace {

// One sign decision plus the 4-subset checks it completes.
struct Step {
  int rank;
  std::vector<QuadCheck> checks;
};

void put_bit(Signotope::Words& w, int rank, unsigned value) {
  const std::uint64_t mask = 1ULL << (63 - (rank & 63));
  if (value)
    w[rank >> 6] |= mask;
  else
    w[rank >> 6] &= ~mask;
}

bool checks_pass(const Signotope::Words& w, const Step& st) {
  for (const QuadCheck& q : st.checks)
    if (!quad_ok(w, q)) return false;
  return true;
}

// Extension order: triples grouped by their maximum element m, within a
// group in lex order of the pair below m. The 4-subsets {x,a,b,m} completed
// by assigning (a,b,m) are exactly those with x < a; the other three triples
// were fixed earlier.
std::vector<Step> extension_script(int n) {
  std::vector<Step> steps;
  for (int m = 3; m <= n; ++m)
    for (int a = 1; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        Step st;
        st.rank = triple_rank(n, a, b, m);
        for (int x = 1; x < a; ++x)
          st.checks.push_back(QuadCheck{
              {x, a, b, m},
              {triple_rank(n, x, a, b), triple_rank(n, x, a, m),
               triple_rank(n, x, b, m), st.rank}});
        steps.push_back(std::move(st));
      }
  return steps;
}

// Rank order: triples assigned by increasing lex rank. The table's
// quads_ending_at gives the 4-subsets completed by each rank, so DFS leaves
// appear in increasing sign-string order (Minus branch first).
std::vector<Step> lex_script(int n) {
  const TripleTable& t = triple_table(n);
  std::vector<Step> steps(t.triple_count);
  for (int r = 0; r < t.triple_count; ++r) {
    steps[r].rank = r;
    for (int qi : t.quads_ending_at[r]) steps[r].checks.push_back(t.quads[qi]);
  }
  return steps;
}

void count_dfs(const std::vector<Step>& steps, std::size_t depth,
               Signotope::Words& w, std::uint64_t& count) {
  if (depth == steps.size()) {
    ++count;
    return;
  }
  const Step& st = steps[depth];
  for (unsigned v = 0; v < 2; ++v) {
    put_bit(w, st.rank, v);
    if (checks_pass(w, st)) count_dfs(steps, depth + 1, w, count);
  }
  put_bit(w, st.rank, 0);
}

void prefix_dfs(const std::vector<Step>& steps, std::size_t depth,
                std::size_t stop, Signotope::Words& w,
                std::vector<Signotope::Words>& out) {
  if (depth == stop) {
    out.push_back(w);
    return;
  }
  const Step& st = steps[depth];
  for (unsigned v = 0; v < 2; ++v) {
    put_bit(w, st.rank, v);
    if (checks_pass(w, st)) prefix_dfs(steps, depth + 1, stop, w, out);
  }
  put_bit(w, st.rank, 0);
}

}  // namespace

std::uint64_t count_all(int n, int jobs) {
  if (n < 3) throw std::invalid_argument("count_all: n must be at least 3");
  triple_table(n);  // range check
  const std::vector<Step> steps = extension_script(n);

  // split point: end of the 5-element prefix (C(5,3) = 10 decisions)
  const std::size_t split = (n > 5 && jobs > 1) ? 10 : 0;
  if (split == 0) {
    Signotope::Words w{};
    std::uint64_t count = 0;
    count_dfs(steps, 0, w, count);
    return count;
  }

  std::vector<Signotope::Words> prefixes;
  {
    Signotope::Words w{};
    prefix_dfs(steps, 0, split, w, prefixes);
  }
  std::vector<std::uint64_t> partial(prefixes.size(), 0);
  parallel_tasks(prefixes.size(), jobs, [&](std::size_t t) {
    Signotope::Words w = prefixes[t];
    count_dfs(steps, split, w, partial[t]);
  });
  std::uint64_t total = 0;
  for (std::uint64_t c : partial) total += c;
  return total;
}

void enumerate(int n, const std::function<void(const Signotope&)>& visit,
               EnumLimits limits) {
  if (n < 3) throw std::invalid_argument("enumerate: n must be at least 3");
  if (n > limits.effective_cap())
    throw CapError("enumerate: n=" + std::to_string(n) +
                   " exceeds the materialization cap (" +
                   std::to_string(limits.effective_cap()) +
                   "); pass allow_large / --allow-large for n=7");
  const std::vector<Step> steps = lex_script(n);
  Signotope::Words w{};
  // iterative DFS would obscure the branch order; depth is at most C(7,3)
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == steps.size()) {
      visit(Signotope::Raw::wrap(n, w));
      return;
    }
    const Step& st = steps[depth];
    for (unsigned v = 0; v < 2; ++v) {
      put_bit(w, st.rank, v);
      if (checks_pass(w, st)) self(self, depth + 1);
    }
    put_bit(w, st.rank, 0);
  };
  rec(rec, 0);
}

}  // namespace gensig
