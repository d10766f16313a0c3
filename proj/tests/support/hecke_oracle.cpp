#include "hecke_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

using fiatcells::Integer;
using fiatcells::LaurentPoly;

namespace {

const LaurentPoly v = LaurentPoly::monomial(1);
const LaurentPoly v_inv = LaurentPoly::monomial(-1);

Perm swap_values(int i, Perm w) {
  for (auto& x : w) {
    if (x == i) {
      x = i + 1;
    } else if (x == i + 1) {
      x = i;
    }
  }
  return w;
}

void accumulate(Element& e, const Perm& w, const LaurentPoly& c) {
  if (c.is_zero()) {
    return;
  }
  auto& slot = e[w];
  slot += c;
  if (slot.is_zero()) {
    e.erase(w);
  }
}

Element scaled(const Element& e, const LaurentPoly& c) {
  Element out;
  for (const auto& [w, x] : e) {
    accumulate(out, w, x * c);
  }
  return out;
}

// First simple reflection i with length(s_i w) < length(w), or 0.
int left_descent(const Perm& w) {
  for (int i = 1; i < static_cast<int>(w.size()); ++i) {
    if (HeckeOracle::length(swap_values(i, w)) < HeckeOracle::length(w)) {
      return i;
    }
  }
  return 0;
}

std::vector<int> word(Perm w) {
  std::vector<int> out;
  while (int i = left_descent(w)) {
    out.push_back(i);
    w = swap_values(i, w);
  }
  return out;
}

}  // namespace

int HeckeOracle::length(const Perm& w) {
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      count += w[i] > w[j];
    }
  }
  return count;
}

std::string HeckeOracle::label(const Perm& w) {
  std::string out = "theta_";
  for (int x : w) {
    out += std::to_string(x);
  }
  return out;
}

Element HeckeOracle::times_simple(int i, const Element& e) const {
  Element out;
  for (const auto& [w, c] : e) {
    auto sw = swap_values(i, w);
    accumulate(out, sw, c);
    if (length(sw) < length(w)) {
      accumulate(out, w, c * (v_inv - v));
    }
  }
  return out;
}

Element HeckeOracle::standard_product(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [x, c] : a) {
    Element term = b;
    auto letters = word(x);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      term = times_simple(*it, term);
    }
    for (const auto& [w, d] : term) {
      accumulate(out, w, c * d);
    }
  }
  return out;
}

Element HeckeOracle::bar(const Element& e) const {
  Element out;
  for (const auto& [x, c] : e) {
    Perm id(x.size());
    std::iota(id.begin(), id.end(), 1);
    Element term{{id, LaurentPoly(1)}};
    // bar(H_x) = bar(H_{i1}) ... bar(H_{ik}) with bar(H_s) = H_s + v - v^-1.
    auto letters = word(x);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      auto shifted = times_simple(*it, term);
      for (const auto& [w, d] : term) {
        accumulate(shifted, w, d * (v - v_inv));
      }
      term = std::move(shifted);
    }
    for (const auto& [w, d] : term) {
      accumulate(out, w, c.bar() * d);
    }
  }
  return out;
}

HeckeOracle::HeckeOracle(int n) : n_(n) {
  Perm w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    elements_.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  std::stable_sort(elements_.begin(), elements_.end(),
                   [](const Perm& a, const Perm& b) { return length(a) < length(b); });

  std::map<Perm, Element> bar_standard;
  for (const auto& y : elements_) {
    bar_standard[y] = bar(Element{{y, LaurentPoly(1)}});
  }

  for (const auto& target : elements_) {
    std::map<Perm, LaurentPoly> h{{target, LaurentPoly(1)}};
    for (auto it = elements_.rbegin(); it != elements_.rend(); ++it) {
      const auto& x = *it;
      if (length(x) >= length(target)) {
        continue;
      }
      LaurentPoly q;
      for (const auto& [y, hy] : h) {
        const auto& image = bar_standard.at(y);
        auto found = image.find(x);
        if (found != image.end()) {
          q += hy.bar() * found->second;
        }
      }
      // h - bar(h) = q with h in v·Z[v].
      LaurentPoly positive;
      for (const auto& [d, c] : q.terms()) {
        if (d > 0) {
          positive += LaurentPoly::monomial(d, c);
        }
      }
      if (!(positive - positive.bar() == q)) {
        throw std::logic_error("bar-invariance system is inconsistent at " + label(x) + ", " +
                               label(target));
      }
      if (!positive.is_zero()) {
        h[x] = positive;
      }
    }
    Element b;
    for (const auto& [x, c] : h) {
      accumulate(b, x, c);
    }
    if (!(bar(b) == b)) {
      throw std::logic_error("computed b_" + label(target) + " is not bar invariant");
    }
    kl_[target] = std::move(b);
  }
}

Element HeckeOracle::to_kl(Element e) const {
  Element out;
  while (!e.empty()) {
    auto top = std::max_element(e.begin(), e.end(), [](const auto& a, const auto& b) {
      return length(a.first) < length(b.first);
    });
    auto w = top->first;
    auto c = top->second;
    accumulate(out, w, c);
    for (const auto& [x, d] : scaled(kl_.at(w), c)) {
      accumulate(e, x, -d);
    }
  }
  return out;
}

Element HeckeOracle::product(const Perm& x, const Perm& y) const {
  return to_kl(standard_product(kl_.at(x), kl_.at(y)));
}

std::map<Perm, Integer> HeckeOracle::product_at_one(const Perm& x, const Perm& y) const {
  std::map<Perm, Integer> out;
  for (const auto& [w, c] : product(x, y)) {
    auto value = c.at_one();
    if (value != 0) {
      out[w] = value;
    }
  }
  return out;
}

}  // namespace oracle
