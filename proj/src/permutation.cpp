#include "fiatcells/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fiatcells {

std::string format_permutation(const Permutation& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out += (i ? " " : "") + std::to_string(w[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::string cleaned(text);
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  Permutation w;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      int value = std::stoi(token, &used);
      if (used != token.size()) {
        throw std::invalid_argument(token);
      }
      w.push_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed permutation entry '" + token + "'");
    }
  }
  if (w.empty()) {
    throw std::invalid_argument("empty permutation");
  }
  std::vector<bool> seen(w.size() + 1, false);
  for (int v : w) {
    if (v < 1 || v > static_cast<int>(w.size()) || seen[v]) {
      throw std::invalid_argument("'" + std::string(text) + "' is not a permutation of 1.." +
                                  std::to_string(w.size()));
    }
    seen[v] = true;
  }
  return w;
}

Permutation compose(const Permutation& x, const Permutation& y) {
  Permutation out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    out[i] = x[y[i] - 1];
  }
  return out;
}

Permutation inverse(const Permutation& w) {
  Permutation out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[w[i] - 1] = static_cast<int>(i) + 1;
  }
  return out;
}

int length(const Permutation& w) {
  int inversions = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      inversions += w[i] > w[j] ? 1 : 0;
    }
  }
  return inversions;
}

Permutation identity_permutation(int n) {
  Permutation w(n);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

Permutation longest_element(int n) {
  Permutation w(n);
  for (int i = 0; i < n; ++i) {
    w[i] = n - i;
  }
  return w;
}

Permutation left_multiply_simple(int i, const Permutation& w) {
  Permutation out = w;
  for (int& v : out) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
  return out;
}

bool is_left_descent(int i, const Permutation& w) {
  auto inv = inverse(w);
  return inv[i - 1] > inv[i];
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> word;
  Permutation current = w;
  const int n = static_cast<int>(w.size());
  while (length(current) > 0) {
    for (int i = 1; i < n; ++i) {
      if (is_left_descent(i, current)) {
        word.push_back(i);
        current = left_multiply_simple(i, current);
        break;
      }
    }
  }
  return word;
}

Permutation word_to_permutation(int n, const std::vector<int>& word) {
  Permutation w = identity_permutation(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 1 || *it >= n) {
      throw std::invalid_argument("simple reflection s" + std::to_string(*it) +
                                  " does not exist in S" + std::to_string(n));
    }
    w = left_multiply_simple(*it, w);
  }
  return w;
}

std::vector<int> parse_word(std::string_view text) {
  std::vector<int> word;
  std::string t(text);
  if (t == "e" || t.find_first_not_of(" \t") == std::string::npos) {
    return word;
  }
  bool spaced = t.find_first_of(" ,") != std::string::npos;
  if (spaced) {
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream in(t);
    std::string token;
    while (in >> token) {
      if (token.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("malformed word entry '" + token + "'");
      }
      word.push_back(std::stoi(token));
    }
  } else {
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("malformed word '" + t + "'");
      }
      word.push_back(c - '0');
    }
  }
  return word;
}

bool bruhat_leq(const Permutation& x, const Permutation& w) {
  const auto n = static_cast<int>(x.size());
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int cx = 0;
      int cw = 0;
      for (int a = 0; a < i; ++a) {
        cx += x[a] >= j ? 1 : 0;
        cw += w[a] >= j ? 1 : 0;
      }
      if (cx > cw) {
        return false;
      }
    }
  }
  return true;
}

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  if (n < 1) {
    throw std::invalid_argument("symmetric group rank must be positive");
  }
  Permutation w = identity_permutation(n);
  do {
    elements_.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  std::stable_sort(elements_.begin(), elements_.end(),
                   [](const Permutation& a, const Permutation& b) { return length(a) < length(b); });
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i], i);
    lengths_.push_back(length(elements_[i]));
  }
  left_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (int s = 1; s < n; ++s) {
      left_[i].push_back(index_.at(left_multiply_simple(s, elements_[i])));
    }
  }
  bruhat_.assign(elements_.size(), std::vector<bool>(elements_.size(), false));
  for (std::size_t x = 0; x < elements_.size(); ++x) {
    for (std::size_t y = 0; y < elements_.size(); ++y) {
      bruhat_[x][y] = lengths_[x] <= lengths_[y] && bruhat_leq(elements_[x], elements_[y]);
    }
  }
}

std::size_t SymmetricGroup::index_of(const Permutation& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) {
    throw std::invalid_argument("'" + format_permutation(w) + "' is not an element of S" +
                                std::to_string(n_));
  }
  return it->second;
}

}  // namespace fiatcells
