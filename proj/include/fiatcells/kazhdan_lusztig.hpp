#pragma once

// Kazhdan–Lusztig data for S_n in the normalization H_s² = 1 + (v^{-1} − v)H_s,
// b_s = H_s + v, b_w = Σ_x v^{ℓ(w)−ℓ(x)} P_{x,w}(v^{-2}) H_x.

#include <utility>
#include <vector>

#include "fiatcells/laurent.hpp"
#include "fiatcells/permutation.hpp"

namespace fiatcells {

/// Element of the Hecke algebra in the KL basis: sorted (index, coefficient in v) pairs.
using KLElement = std::vector<std::pair<std::size_t, LaurentPoly>>;

class KLTable {
 public:
  explicit KLTable(int n);

  const SymmetricGroup& group() const { return group_; }

  /// P_{x,w} as a polynomial in q; zero unless x ≤ w.
  const LaurentPoly& polynomial(std::size_t x, std::size_t w) const { return p_.at(x).at(w); }
  /// Coefficient of q^{(ℓ(w)−ℓ(z)−1)/2} in P_{z,w}; zero when the length difference is even.
  const Integer& mu(std::size_t z, std::size_t w) const { return mu_.at(z).at(w); }

  /// b_s b_w in the KL basis, for the simple reflection s_i.
  KLElement left_simple_product(int i, std::size_t w) const;

  /// Full table b_x b_y = Σ_z h_{x,y,z} b_z, indexed [x][y]. O(|W|³) work.
  std::vector<std::vector<KLElement>> products() const;

 private:
  SymmetricGroup group_;
  std::vector<std::vector<LaurentPoly>> p_;
  std::vector<std::vector<Integer>> mu_;
};

/// Convenience wrapper: P_{x,w} for permutations of S_n.
LaurentPoly kl_polynomial(int n, const Permutation& x, const Permutation& w);

}  // namespace fiatcells
