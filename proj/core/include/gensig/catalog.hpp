#pragma once

#include <string>
#include <vector>

#include "gensig/signotope.hpp"

namespace gensig {

// Known small generalized signotopes used as fixtures and regression
// anchors, encoded by their plus-triples.

// The three 6-element signotopes with 3 crossings that topological drawings
// of K6 realize, and the seven from the same flip class that no drawing
// realizes.
const std::vector<Signotope>& six_element_cr3_realizable();
const std::vector<Signotope>& six_element_cr3_unrealizable();

// A 7-element signotope with 7 crossings. Every drawing of K7 has at least
// kK7DrawingMinCrossings crossings, so no drawing realizes it.
const Signotope& seven_element_cr7();
inline constexpr int kK7DrawingMinCrossings = 9;

struct ListingCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Named regression checks over the catalog: validity, crossing numbers,
// and flip-class membership of the ten 6-element examples.
std::vector<ListingCheck> check_listing_facts();

}  // namespace gensig
