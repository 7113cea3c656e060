#include "gensig/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace gensig {

Signotope canonical_form(const Signotope& s, CanonicalMode mode) {
  std::vector<int> images(s.n());
  std::iota(images.begin(), images.end(), 1);
  Signotope best = s;
  bool first = true;
  do {
    const Signotope r = s.relabeled(Permutation(images));
    if (first || r < best) best = r;
    first = false;
    if (mode == CanonicalMode::RelabelAndNegate) {
      const Signotope rn = r.negated();
      if (rn < best) best = rn;
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return best;
}

}  // namespace gensig
