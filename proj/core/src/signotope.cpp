#include "gensig/signotope.hpp"

#include <algorithm>
#include <stdexcept>

namespace gensig {

namespace {

void set_bit(Signotope::Words& w, int rank, unsigned value) {
  const std::uint64_t mask = 1ULL << (63 - (rank & 63));
  if (value)
    w[rank >> 6] |= mask;
  else
    w[rank >> 6] &= ~mask;
}

// sorts three distinct values in place, returns parity (0 even, 1 odd)
unsigned sort3(int& a, int& b, int& c) {
  unsigned p = 0;
  if (a > b) std::swap(a, b), p ^= 1;
  if (b > c) std::swap(b, c), p ^= 1;
  if (a > b) std::swap(a, b), p ^= 1;
  return p;
}

}  // namespace

std::variant<Signotope, Violation> Signotope::validate(
    int n, std::span<const Sign> signs) {
  const TripleTable& t = triple_table(n);  // throws if n out of range
  if (static_cast<int>(signs.size()) != t.triple_count)
    throw std::invalid_argument("validate: sign sequence must have length C(n,3)");
  Words w{};
  for (int r = 0; r < t.triple_count; ++r)
    if (signs[r] == Sign::Plus) set_bit(w, r, 1);
  for (const QuadCheck& q : t.quads) {
    if (!quad_ok(w, q)) {
      Violation v;
      v.subset = q.elems;
      for (int k = 0; k < 4; ++k) v.pattern[k] = signs[q.ranks[k]];
      return v;
    }
  }
  return Signotope(n, w);
}

Signotope Signotope::from_signs(int n, std::span<const Sign> signs) {
  auto r = validate(n, signs);
  if (auto* v = std::get_if<Violation>(&r)) {
    std::string msg = "forbidden alternating pattern on 4-subset {";
    for (int k = 0; k < 4; ++k)
      msg += std::to_string(v->subset[k]) + (k < 3 ? "," : "}");
    throw std::invalid_argument(msg);
  }
  return std::get<Signotope>(r);
}

Signotope Signotope::all_plus(int n) {
  const TripleTable& t = triple_table(n);
  Words w{};
  for (int r = 0; r < t.triple_count; ++r) set_bit(w, r, 1);
  return Signotope(n, w);
}

Signotope Signotope::all_minus(int n) {
  triple_table(n);
  return Signotope(n, Words{});
}

Sign Signotope::chi(int a, int b, int c) const {
  if (a == b || a == c || b == c)
    throw std::invalid_argument("chi: elements must be pairwise distinct");
  if (a < 1 || a > n_ || b < 1 || b > n_ || c < 1 || c > n_)
    throw std::invalid_argument("chi: element out of range");
  const unsigned parity = sort3(a, b, c);
  const Sign s = stored(triple_rank(n_, a, b, c));
  return parity ? -s : s;
}

Signotope Signotope::negated() const {
  const TripleTable& t = triple_table(n_);
  Words w = bits_;
  for (int r = 0; r < t.triple_count; ++r)
    w[r >> 6] ^= 1ULL << (63 - (r & 63));
  // validity is preserved: both forbidden patterns are fixed under negation
  return Signotope(n_, w);
}

Signotope Signotope::relabeled(const Permutation& p) const {
  if (p.n() != n_) throw std::invalid_argument("relabel: permutation size mismatch");
  const TripleTable& t = triple_table(n_);
  Words w{};
  for (int r = 0; r < t.triple_count; ++r) {
    auto [a, b, c] = t.triples[r];
    int x = p(a), y = p(b), z = p(c);
    const unsigned parity = sort3(x, y, z);
    const unsigned s = static_cast<unsigned>(stored(r)) ^ parity;
    set_bit(w, triple_rank(n_, x, y, z), s);
  }
  return Signotope(n_, w);
}

Signotope Signotope::restricted_to(std::span<const int> elements) const {
  const int k = static_cast<int>(elements.size());
  if (k < 3) throw std::invalid_argument("restrict: need at least 3 elements");
  for (int i = 0; i < k; ++i) {
    if (elements[i] < 1 || elements[i] > n_)
      throw std::invalid_argument("restrict: element out of range");
    if (i > 0 && elements[i] <= elements[i - 1])
      throw std::invalid_argument("restrict: elements must be strictly increasing");
  }
  Words w{};
  const TripleTable& sub = triple_table(k);
  for (int r = 0; r < sub.triple_count; ++r) {
    auto [a, b, c] = sub.triples[r];
    const Sign s = stored(
        triple_rank(n_, elements[a - 1], elements[b - 1], elements[c - 1]));
    if (s == Sign::Plus) set_bit(w, r, 1);
  }
  // restriction of a valid signotope is valid: every 4-subset of the subset
  // is a 4-subset of the original
  return Signotope(k, w);
}

std::vector<Sign> Signotope::signs() const {
  const int count = triple_count();
  std::vector<Sign> out(count);
  for (int r = 0; r < count; ++r) out[r] = stored(r);
  return out;
}

}  // namespace gensig
