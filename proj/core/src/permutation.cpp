#include "gensig/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace gensig {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("Permutation: images must be a bijection on {1..n}");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
  auto p = identity(n);
  if (a < 1 || a > n || b < 1 || b > n)
    throw std::invalid_argument("transposition: element out of range");
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

Permutation Permutation::reversal(int n) {
  std::vector<int> im(n);
  for (int k = 1; k <= n; ++k) im[k - 1] = n + 1 - k;
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int k = 1; k <= n(); ++k) im[images_[k - 1] - 1] = k;
  return Permutation(std::move(im));
}

Permutation operator*(const Permutation& q, const Permutation& p) {
  if (q.n() != p.n()) throw std::invalid_argument("composition: size mismatch");
  std::vector<int> im(p.images_.size());
  for (int k = 1; k <= p.n(); ++k) im[k - 1] = q(p(k));
  return Permutation(std::move(im));
}

}  // namespace gensig
