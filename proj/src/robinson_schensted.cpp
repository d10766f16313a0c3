#include "fiatcells/robinson_schensted.hpp"

#include <algorithm>
#include <stdexcept>

namespace fiatcells {

TableauPair robinson_schensted(const Permutation& w) {
  TableauPair out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    int value = w[k];
    std::size_t row = 0;
    while (true) {
      if (row == out.p.size()) {
        out.p.push_back({value});
        out.q.push_back({static_cast<int>(k) + 1});
        break;
      }
      auto& r = out.p[row];
      auto it = std::upper_bound(r.begin(), r.end(), value);
      if (it == r.end()) {
        r.push_back(value);
        out.q[row].push_back(static_cast<int>(k) + 1);
        break;
      }
      std::swap(value, *it);
      ++row;
    }
  }
  return out;
}

std::vector<int> shape(const Tableau& t) {
  std::vector<int> out;
  for (const auto& row : t) {
    out.push_back(static_cast<int>(row.size()));
  }
  return out;
}

bool is_standard(const Tableau& t) {
  std::vector<int> all;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].empty() || (i > 0 && t[i].size() > t[i - 1].size())) {
      return false;
    }
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      if (j > 0 && t[i][j] <= t[i][j - 1]) {
        return false;
      }
      if (i > 0 && t[i][j] <= t[i - 1][j]) {
        return false;
      }
      all.push_back(t[i][j]);
    }
  }
  std::sort(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (all[k] != static_cast<int>(k) + 1) {
      return false;
    }
  }
  return true;
}

Permutation inverse_robinson_schensted(const TableauPair& pair) {
  if (shape(pair.p) != shape(pair.q) || !is_standard(pair.p) || !is_standard(pair.q)) {
    throw std::invalid_argument("tableau pair is not two standard tableaux of one shape");
  }
  Tableau p = pair.p;
  Tableau q = pair.q;
  int n = 0;
  for (const auto& row : p) {
    n += static_cast<int>(row.size());
  }
  Permutation w(n);
  for (int k = n; k >= 1; --k) {
    std::size_t row = 0;
    while (q[row].back() != k) {
      ++row;
    }
    q[row].pop_back();
    int value = p[row].back();
    p[row].pop_back();
    if (p[row].empty()) {
      p.pop_back();
      q.pop_back();
    }
    while (row > 0) {
      --row;
      auto& r = p[row];
      auto it = std::lower_bound(r.begin(), r.end(), value);
      --it;
      std::swap(value, *it);
    }
    w[k - 1] = value;
  }
  return w;
}

std::string format_tableau(const Tableau& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    out += i ? " / " : "";
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      out += (j ? " " : "") + std::to_string(t[i][j]);
    }
  }
  return out;
}

}  // namespace fiatcells
