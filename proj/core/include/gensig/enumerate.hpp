#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "gensig/signotope.hpp"

namespace gensig {

// Materialization is capped: enumeration and class computation walk every
// object, which is hopeless beyond n=7 (and already heavy there).
struct EnumLimits {
  int materialize_cap = 6;
  bool allow_large = false;  // raises the cap to 7
  int effective_cap() const {
    return allow_large && materialize_cap < 7 ? 7 : materialize_cap;
  }
};

class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact number of generalized signotopes on n labeled elements. Backtracking
// extension: elements are added one at a time in increasing label order;
// adding element m fixes the C(m-1,2) triples containing m in lex order of
// the pair, and each assignment is pruned against the 4-subsets completed by
// it (all of which contain m). Soundness rests on restriction closure:
// deleting an element of a generalized signotope leaves one.
// Counts only; nothing is materialized. With jobs > 1 the tree is split at
// the 5-element prefixes and per-prefix counts are summed.
std::uint64_t count_all(int n, int jobs = 1);

// Visits every generalized signotope on n elements exactly once, in
// lexicographic sign-string order (Minus < Plus). Requires n within the cap.
void enumerate(int n, const std::function<void(const Signotope&)>& visit,
               EnumLimits limits = {});

}  // namespace gensig
