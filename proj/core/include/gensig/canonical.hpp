#pragma once

#include "gensig/signotope.hpp"

namespace gensig {

enum class CanonicalMode {
  RelabelOnly,       // minimum over all n! relabelings
  RelabelAndNegate,  // minimum over all 2 * n! relabelings and negations
};

// Table 3's relabeling classes quotient by negation as well: at n=6 the
// relabel-only action yields 253 orbits, relabel-and-negate yields 167.
// Resolved empirically; fixed here as the project-wide default.
inline constexpr CanonicalMode kDefaultCanonicalMode = CanonicalMode::RelabelAndNegate;

// Lexicographically smallest sign string (Minus < Plus) over the group orbit.
// Deterministic, idempotent, constant on orbits. Explicit orbit scan.
Signotope canonical_form(const Signotope& s,
                         CanonicalMode mode = kDefaultCanonicalMode);

}  // namespace gensig
