#pragma once

// Reference computation of the Kazhdan-Lusztig basis of the Hecke algebra of
// S_n, kept separate from the library's recursion. Elements live in the
// standard basis {H_w}; b_w is found from bar invariance and the degree bound
// alone, via R-polynomials obtained by expanding bar(H_w) directly.

#include <map>
#include <string>
#include <vector>

#include "fiatcells/laurent.hpp"

namespace oracle {

using Perm = std::vector<int>;  // one-line notation, values 1..n
using Element = std::map<Perm, fiatcells::LaurentPoly>;

class HeckeOracle {
 public:
  explicit HeckeOracle(int n);

  const std::vector<Perm>& elements() const { return elements_; }
  const Element& kl_basis(const Perm& w) const { return kl_.at(w); }
  /// Coefficients of b_x b_y in the KL basis.
  Element product(const Perm& x, const Perm& y) const;
  /// Same, evaluated at v = 1.
  std::map<Perm, fiatcells::Integer> product_at_one(const Perm& x, const Perm& y) const;

  static int length(const Perm& w);
  static std::string label(const Perm& w);

 private:
  int n_;
  std::vector<Perm> elements_;
  std::map<Perm, Element> kl_;

  Element times_simple(int i, const Element& e) const;
  Element standard_product(const Element& a, const Element& b) const;
  Element bar(const Element& e) const;
  Element to_kl(Element e) const;
};

}  // namespace oracle
