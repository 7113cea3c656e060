#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "gensig/canonical.hpp"
#include "gensig/enumerate.hpp"
#include "gensig/signotope.hpp"

namespace gensig {

enum class ClassMode { Relabeling, Flip };

struct ClassInfo {
  Signotope representative;  // lex-least member
  std::uint64_t size = 0;    // member signotopes, not representatives
  int crossings = 0;         // shared by every member
};

// Partition of all signotopes on n elements into relabeling orbits or flip
// classes (flips + relabeling, plus negation when the canonical mode
// includes it). Classes are listed by increasing representative.
struct ClassIndex {
  int n = 0;
  ClassMode mode = ClassMode::Relabeling;
  CanonicalMode canonical = kDefaultCanonicalMode;
  std::uint64_t total = 0;  // = count of all signotopes on n elements
  std::vector<ClassInfo> classes;
};

ClassIndex compute_class_index(int n, ClassMode mode,
                               CanonicalMode cmode = kDefaultCanonicalMode,
                               EnumLimits limits = {});

std::uint64_t count_relabeling_classes(int n,
                                       CanonicalMode cmode = kDefaultCanonicalMode,
                                       EnumLimits limits = {});
std::uint64_t count_flip_classes(int n,
                                 CanonicalMode cmode = kDefaultCanonicalMode,
                                 EnumLimits limits = {});

// The flip class of s as a set of canonical representatives: breadth-first
// closure where the neighbors of a representative are the canonical forms of
// its legal flips.
std::set<Signotope> flip_class(const Signotope& s,
                               CanonicalMode cmode = kDefaultCanonicalMode);

}  // namespace gensig
