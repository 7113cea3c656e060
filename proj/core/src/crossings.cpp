#include "gensig/crossings.hpp"

#include <algorithm>

#include "gensig/catalog.hpp"

namespace gensig {

namespace {

unsigned word_bit(const Signotope::Words& w, int r) {
  return (w[r >> 6] >> (63 - (r & 63))) & 1u;
}

// plus-count parity of the quad's sign sequence: 0 = even = TypeI
unsigned quad_parity(const Signotope::Words& w, const QuadCheck& q) {
  return word_bit(w, q.ranks[0]) ^ word_bit(w, q.ranks[1]) ^
         word_bit(w, q.ranks[2]) ^ word_bit(w, q.ranks[3]);
}

}  // namespace

CrossingType crossing_type(const Signotope& s, int a, int b, int c, int d) {
  if (!(1 <= a && a < b && b < c && c < d && d <= s.n()))
    throw std::invalid_argument("crossing_type: need a sorted 4-subset of {1..n}");
  const unsigned parity = static_cast<unsigned>(s.chi(a, b, c) == Sign::Plus) ^
                          static_cast<unsigned>(s.chi(a, b, d) == Sign::Plus) ^
                          static_cast<unsigned>(s.chi(a, c, d) == Sign::Plus) ^
                          static_cast<unsigned>(s.chi(b, c, d) == Sign::Plus);
  return parity == 0 ? CrossingType::TypeI : CrossingType::TypeII;
}

CrossingProfile crossing_profile(const Signotope& s) {
  const TripleTable& t = triple_table(s.n());
  CrossingProfile p;
  p.types.reserve(t.quads.size());
  for (const QuadCheck& q : t.quads) {
    const CrossingType type =
        quad_parity(s.words(), q) == 0 ? CrossingType::TypeI : CrossingType::TypeII;
    if (type == CrossingType::TypeI) ++p.total;
    p.types.emplace_back(q.elems, type);
  }
  return p;
}

int crossing_number(const Signotope& s) {
  const TripleTable& t = triple_table(s.n());
  int total = 0;
  for (const QuadCheck& q : t.quads)
    if (quad_parity(s.words(), q) == 0) ++total;
  return total;
}

namespace {

// branch and bound over the lex assignment order; the crossing count of
// completed 4-subsets never decreases along a branch
struct BnB {
  const TripleTable& t;
  std::vector<std::vector<const QuadCheck*>> completed_at;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  int best;
  std::optional<Signotope::Words> best_words;
  bool truncated = false;

  BnB(int n, int incumbent, std::uint64_t node_budget)
      : t(triple_table(n)), budget(node_budget), best(incumbent) {
    completed_at.resize(t.triple_count);
    for (int r = 0; r < t.triple_count; ++r)
      for (int qi : t.quads_ending_at[r])
        completed_at[r].push_back(&t.quads[qi]);
  }

  void run(Signotope::Words& w, int depth, int crossings) {
    if (crossings >= best) return;
    if (++nodes > budget) {
      truncated = true;
      return;
    }
    if (depth == t.triple_count) {
      best = crossings;
      best_words = w;
      return;
    }
    for (unsigned v = 0; v < 2 && !truncated; ++v) {
      const std::uint64_t mask = 1ULL << (63 - (depth & 63));
      if (v)
        w[depth >> 6] |= mask;
      else
        w[depth >> 6] &= ~mask;
      int added = 0;
      bool ok = true;
      for (const QuadCheck* q : completed_at[depth]) {
        if (!quad_ok(w, *q)) {
          ok = false;
          break;
        }
        if (quad_parity(w, *q) == 0) ++added;
      }
      if (ok) run(w, depth + 1, crossings + added);
    }
    w[depth >> 6] &= ~(1ULL << (63 - (depth & 63)));
  }
};

}  // namespace

MinCrossingsResult min_crossings(int n, EnumLimits limits,
                                 std::uint64_t node_budget) {
  if (n < 3) throw std::invalid_argument("min_crossings: n must be at least 3");
  if (n <= 6 || n <= limits.materialize_cap) {
    std::optional<MinCrossingsResult> result;
    enumerate(
        n,
        [&](const Signotope& s) {
          const int c = crossing_number(s);
          if (!result || c < result->crossings)
            result = MinCrossingsResult{c, s, true, 0};
        },
        limits);
    return *result;
  }
  if (n != 7 || !limits.allow_large)
    throw CapError("min_crossings: exhaustive search is capped at n=6 "
                   "(n=7 behind allow_large)");

  // seed with a known 7-crossing object so the search only explores below it
  const Signotope& incumbent = seven_element_cr7();
  const int incumbent_crossings = crossing_number(incumbent);
  BnB bnb(n, incumbent_crossings + 1, node_budget);
  Signotope::Words w{};
  bnb.run(w, 0, 0);

  if (bnb.best_words)
    return MinCrossingsResult{bnb.best, Signotope::Raw::wrap(n, *bnb.best_words),
                              !bnb.truncated, bnb.nodes};
  return MinCrossingsResult{incumbent_crossings, incumbent, !bnb.truncated,
                            bnb.nodes};
}

}  // namespace gensig
