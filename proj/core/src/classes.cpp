#include "gensig/classes.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "gensig/crossings.hpp"
#include "gensig/flip.hpp"

namespace gensig {

namespace {

// Class computation walks every signotope, so it lives under the same caps
// as enumerate; everything fits in the first word there.
struct WordCtx {
  int n;
  int triple_count;
  std::uint64_t used_mask;  // bits of the T triple ranks (MSB-first)
  const TripleTable& table;

  explicit WordCtx(int n_)
      : n(n_),
        triple_count(triple_table(n_).triple_count),
        used_mask(triple_count == 64 ? ~0ULL : ~0ULL << (64 - triple_count)),
        table(triple_table(n_)) {}
};

// rank-to-rank action of one permutation, applied directly to packed words
struct PermAction {
  std::vector<std::uint8_t> dst;   // target rank per source rank
  std::vector<std::uint8_t> flip;  // parity of the sorting permutation
};

std::uint64_t apply(const PermAction& a, std::uint64_t w, int triple_count) {
  std::uint64_t out = 0;
  for (int r = 0; r < triple_count; ++r) {
    const std::uint64_t bit = (w >> (63 - r)) & 1u;
    out |= (bit ^ a.flip[r]) << (63 - a.dst[r]);
  }
  return out;
}

std::vector<PermAction> perm_actions(const WordCtx& ctx) {
  std::vector<int> images(ctx.n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<PermAction> actions;
  do {
    PermAction a;
    a.dst.resize(ctx.triple_count);
    a.flip.resize(ctx.triple_count);
    for (int r = 0; r < ctx.triple_count; ++r) {
      auto [x, y, z] = ctx.table.triples[r];
      int px = images[x - 1], py = images[y - 1], pz = images[z - 1];
      unsigned parity = 0;
      if (px > py) std::swap(px, py), parity ^= 1;
      if (py > pz) std::swap(py, pz), parity ^= 1;
      if (px > py) std::swap(px, py), parity ^= 1;
      a.dst[r] = static_cast<std::uint8_t>(triple_rank(ctx.n, px, py, pz));
      a.flip[r] = static_cast<std::uint8_t>(parity);
    }
    actions.push_back(std::move(a));
  } while (std::next_permutation(images.begin(), images.end()));
  return actions;
}

bool word_valid_after_flip(const WordCtx& ctx, std::uint64_t w, int pair) {
  Signotope::Words words{};
  words[0] = w;
  for (int qi : ctx.table.quads_of_pair[pair])
    if (!quad_ok(words, ctx.table.quads[qi])) return false;
  return true;
}

Signotope wrap_word(const WordCtx& ctx, std::uint64_t w) {
  Signotope::Words words{};
  words[0] = w;
  return Signotope::Raw::wrap(ctx.n, words);
}

// Inserts the orbit of w under relabeling (and negation when requested) into
// seen; returns the number of new members and the lex-least of them.
std::pair<std::uint64_t, std::uint64_t> expand_orbit(
    const WordCtx& ctx, const std::vector<PermAction>& actions, bool with_neg,
    std::uint64_t w, std::unordered_set<std::uint64_t>& seen) {
  std::uint64_t added = 0;
  std::uint64_t least = ~0ULL;
  for (const PermAction& a : actions) {
    const std::uint64_t x = apply(a, w, ctx.triple_count);
    if (seen.insert(x).second) ++added;
    least = std::min(least, x);
    if (with_neg) {
      const std::uint64_t xn = x ^ ctx.used_mask;
      if (seen.insert(xn).second) ++added;
      least = std::min(least, xn);
    }
  }
  return {added, least};
}

}  // namespace

ClassIndex compute_class_index(int n, ClassMode mode, CanonicalMode cmode,
                               EnumLimits limits) {
  const WordCtx ctx(n);
  const bool with_neg = cmode == CanonicalMode::RelabelAndNegate;
  const std::vector<PermAction> actions = perm_actions(ctx);
  const std::vector<std::uint64_t> pair_masks = [&] {
    std::vector<std::uint64_t> m(ctx.table.pair_masks.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = ctx.table.pair_masks[i][0];
    return m;
  }();

  ClassIndex index;
  index.n = n;
  index.mode = mode;
  index.canonical = cmode;

  std::unordered_set<std::uint64_t> seen;
  enumerate(
      n,
      [&](const Signotope& s) {
        ++index.total;
        const std::uint64_t w = s.words()[0];
        if (seen.contains(w)) return;
        // s is the lex-least member: anything smaller was enumerated earlier
        if (mode == ClassMode::Relabeling) {
          auto [size, least] = expand_orbit(ctx, actions, with_neg, w, seen);
          (void)least;
          index.classes.push_back(ClassInfo{s, size, crossing_number(s)});
          return;
        }
        // flip class: BFS over relabeling orbits; flip edges from the orbit
        // representative reach every neighbor orbit because flips commute
        // with relabeling and negation
        std::uint64_t class_size = 0;
        std::deque<std::uint64_t> queue;
        auto [size0, least0] = expand_orbit(ctx, actions, with_neg, w, seen);
        class_size += size0;
        queue.push_back(least0);
        while (!queue.empty()) {
          const std::uint64_t rep = queue.front();
          queue.pop_front();
          for (std::size_t pi = 0; pi < pair_masks.size(); ++pi) {
            const std::uint64_t flipped = rep ^ pair_masks[pi];
            if (seen.contains(flipped)) continue;
            if (!word_valid_after_flip(ctx, flipped, static_cast<int>(pi)))
              continue;
            auto [sz, least] = expand_orbit(ctx, actions, with_neg, flipped, seen);
            class_size += sz;
            queue.push_back(least);
          }
        }
        index.classes.push_back(ClassInfo{s, class_size, crossing_number(s)});
      },
      limits);
  return index;
}

std::uint64_t count_relabeling_classes(int n, CanonicalMode cmode,
                                       EnumLimits limits) {
  return compute_class_index(n, ClassMode::Relabeling, cmode, limits).classes.size();
}

std::uint64_t count_flip_classes(int n, CanonicalMode cmode, EnumLimits limits) {
  return compute_class_index(n, ClassMode::Flip, cmode, limits).classes.size();
}

std::set<Signotope> flip_class(const Signotope& s, CanonicalMode cmode) {
  std::set<Signotope> reps;
  std::deque<Signotope> queue;
  const Signotope start = canonical_form(s, cmode);
  reps.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    const Signotope rep = queue.front();
    queue.pop_front();
    for (const FlipMove& m : flippable_pairs(rep)) {
      Signotope c = canonical_form(flip(rep, m), cmode);
      if (reps.insert(c).second) queue.push_back(std::move(c));
    }
  }
  return reps;
}

}  // namespace gensig
