#pragma once

#include <vector>

namespace gensig {

// A bijection on {1..n}. images()[k-1] is the image of element k.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);  // throws if not a bijection
  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  // reversal k -> n+1-k; composed with global negation this is the mirror map
  static Permutation reversal(int n);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int element) const { return images_[element - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  // (q * p)(x) = q(p(x))
  friend Permutation operator*(const Permutation& q, const Permutation& p);
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace gensig
