#include "fiatcells/kazhdan_lusztig.hpp"

namespace fiatcells {

namespace {

int first_left_descent(const SymmetricGroup& group, std::size_t w) {
  for (int i = 1; i < group.rank(); ++i) {
    if (group.length_of(group.left_simple(i, w)) < group.length_of(w)) {
      return i;
    }
  }
  return 0;
}

KLElement sparse(const std::vector<LaurentPoly>& dense) {
  KLElement out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!dense[i].is_zero()) {
      out.emplace_back(i, dense[i]);
    }
  }
  return out;
}

}  // namespace

KLTable::KLTable(int n) : group_(n) {
  const auto size = group_.size();
  p_.assign(size, std::vector<LaurentPoly>(size));
  mu_.assign(size, std::vector<Integer>(size, 0));
  p_[0][0] = LaurentPoly(1);
  for (std::size_t w = 1; w < size; ++w) {
    const int s = first_left_descent(group_, w);
    const std::size_t v = group_.left_simple(s, w);
    const int lw = group_.length_of(w);
    for (std::size_t x = 0; x < size; ++x) {
      if (!group_.leq(x, w)) {
        continue;
      }
      const std::size_t sx = group_.left_simple(s, x);
      const int c = group_.length_of(sx) < group_.length_of(x) ? 1 : 0;
      LaurentPoly value = p_[sx][v].shift(1 - c) + p_[x][v].shift(c);
      for (std::size_t z = 0; z < size; ++z) {
        if (mu_[z][v] == 0) {
          continue;
        }
        const std::size_t sz = group_.left_simple(s, z);
        if (group_.length_of(sz) >= group_.length_of(z)) {
          continue;
        }
        value -= LaurentPoly::monomial((lw - group_.length_of(z)) / 2, mu_[z][v]) * p_[x][z];
      }
      p_[x][w] = std::move(value);
    }
    for (std::size_t z = 0; z < size; ++z) {
      const int d = lw - group_.length_of(z);
      if (z != w && group_.leq(z, w) && d % 2 == 1) {
        mu_[z][w] = p_[z][w].coefficient((d - 1) / 2);
      }
    }
  }
}

KLElement KLTable::left_simple_product(int i, std::size_t w) const {
  const std::size_t sw = group_.left_simple(i, w);
  if (group_.length_of(sw) < group_.length_of(w)) {
    return {{w, LaurentPoly::monomial(1) + LaurentPoly::monomial(-1)}};
  }
  std::vector<LaurentPoly> dense(group_.size());
  dense[sw] += LaurentPoly(1);
  for (std::size_t z = 0; z < group_.size(); ++z) {
    if (mu_[z][w] == 0) {
      continue;
    }
    const std::size_t sz = group_.left_simple(i, z);
    if (group_.length_of(sz) < group_.length_of(z)) {
      dense[z] += LaurentPoly(mu_[z][w]);
    }
  }
  return sparse(dense);
}

std::vector<std::vector<KLElement>> KLTable::products() const {
  const auto size = group_.size();
  std::vector<std::vector<KLElement>> table(size, std::vector<KLElement>(size));
  // Cache of b_s b_w, indexed [s-1][w].
  std::vector<std::vector<KLElement>> simple(group_.rank() - 1 > 0 ? group_.rank() - 1 : 0);
  for (int s = 1; s < group_.rank(); ++s) {
    for (std::size_t w = 0; w < size; ++w) {
      simple[s - 1].push_back(left_simple_product(s, w));
    }
  }
  for (std::size_t y = 0; y < size; ++y) {
    table[0][y] = {{y, LaurentPoly(1)}};
  }
  for (std::size_t x = 1; x < size; ++x) {
    const int s = first_left_descent(group_, x);
    const std::size_t xp = group_.left_simple(s, x);
    for (std::size_t y = 0; y < size; ++y) {
      std::vector<LaurentPoly> dense(size);
      for (const auto& [w, coeff] : table[xp][y]) {
        for (const auto& [z, c2] : simple[s - 1][w]) {
          dense[z] += coeff * c2;
        }
      }
      for (std::size_t z = 0; z < size; ++z) {
        if (mu_[z][xp] == 0) {
          continue;
        }
        const std::size_t sz = group_.left_simple(s, z);
        if (group_.length_of(sz) >= group_.length_of(z)) {
          continue;
        }
        for (const auto& [w, coeff] : table[z][y]) {
          dense[w] -= LaurentPoly(mu_[z][xp]) * coeff;
        }
      }
      table[x][y] = sparse(dense);
    }
  }
  return table;
}

LaurentPoly kl_polynomial(int n, const Permutation& x, const Permutation& w) {
  KLTable table(n);
  const auto& group = table.group();
  return table.polynomial(group.index_of(x), group.index_of(w));
}

}  // namespace fiatcells
