#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "gensig/enumerate.hpp"
#include "gensig/signotope.hpp"

namespace gensig {

// The two spherical K4 shapes: a 4-subset is a crossing (TypeI) iff the
// number of Plus entries in its lex sign sequence is even, planar (TypeII)
// iff it is odd.
enum class CrossingType { TypeI, TypeII };

CrossingType crossing_type(const Signotope& s, int a, int b, int c, int d);

struct CrossingProfile {
  std::vector<std::pair<std::array<int, 4>, CrossingType>> types;  // lex order
  int total = 0;  // number of TypeI entries
};

CrossingProfile crossing_profile(const Signotope& s);
int crossing_number(const Signotope& s);

struct MinCrossingsResult {
  int crossings = 0;
  Signotope witness;
  bool exact = true;  // false when the node budget stopped a n=7 search
  std::uint64_t nodes = 0;
};

// Minimum crossing number over all signotopes on n elements with a lex-first
// witness. n <= 6 is an exhaustive scan; n = 7 (behind allow_large) runs a
// branch-and-bound over the lex assignment order, seeded with a known
// 7-crossing incumbent, and reports only an upper bound if the node budget
// runs out.
MinCrossingsResult min_crossings(int n, EnumLimits limits = {},
                                 std::uint64_t node_budget = 500'000'000);

}  // namespace gensig
