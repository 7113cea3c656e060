#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "gensig/signotope.hpp"

namespace gensig {

// Unordered pair of distinct elements; flipping inverts the
// n-2 triples containing both.
struct FlipMove {
  int i, j;
  bool operator==(const FlipMove&) const = default;
};

class NotFlippableError : public std::runtime_error {
 public:
  NotFlippableError(std::string msg, std::array<int, 4> subset)
      : std::runtime_error(std::move(msg)), violating_subset(subset) {}
  std::array<int, 4> violating_subset;
};

// True iff inverting the triples containing both elements leaves a valid
// signotope. Only 4-subsets containing both elements can break.
bool flippable(const Signotope& s, FlipMove m);

// Throws NotFlippableError (carrying the lex-first violating 4-subset) when
// the pair is not flippable.
Signotope flip(const Signotope& s, FlipMove m);

std::vector<FlipMove> flippable_pairs(const Signotope& s);

}  // namespace gensig
