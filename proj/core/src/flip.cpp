#include "gensig/flip.hpp"

namespace gensig {

namespace {

// flipped word array plus the first violating quad, if any
struct FlipOutcome {
  Signotope::Words words;
  const QuadCheck* violation = nullptr;
};

FlipOutcome apply_flip(const Signotope& s, FlipMove m) {
  const int n = s.n();
  if (m.i == m.j || m.i < 1 || m.i > n || m.j < 1 || m.j > n)
    throw std::invalid_argument("flip: need two distinct elements of {1..n}");
  const TripleTable& t = triple_table(n);
  const int pi = t.pair_index(m.i, m.j);

  FlipOutcome out;
  out.words = s.words();
  const auto& mask = t.pair_masks[pi];
  for (int w = 0; w < Signotope::kWords; ++w) out.words[w] ^= mask[w];

  for (int qi : t.quads_of_pair[pi]) {
    if (!quad_ok(out.words, t.quads[qi])) {
      out.violation = &t.quads[qi];
      return out;
    }
  }
  return out;
}

}  // namespace

bool flippable(const Signotope& s, FlipMove m) {
  return apply_flip(s, m).violation == nullptr;
}

Signotope flip(const Signotope& s, FlipMove m) {
  FlipOutcome out = apply_flip(s, m);
  if (out.violation) {
    const auto& e = out.violation->elems;
    throw NotFlippableError(
        "flip(" + std::to_string(m.i) + "," + std::to_string(m.j) +
            "): result violates the 4-subset condition on {" +
            std::to_string(e[0]) + "," + std::to_string(e[1]) + "," +
            std::to_string(e[2]) + "," + std::to_string(e[3]) + "}",
        e);
  }
  return Signotope::Raw::wrap(s.n(), out.words);
}

std::vector<FlipMove> flippable_pairs(const Signotope& s) {
  std::vector<FlipMove> out;
  for (int i = 1; i <= s.n(); ++i)
    for (int j = i + 1; j <= s.n(); ++j)
      if (flippable(s, FlipMove{i, j})) out.push_back(FlipMove{i, j});
  return out;
}

}  // namespace gensig
