#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fiatcells {

/// One-line notation with values 1..n. Products follow (xy)(i) = x(y(i)).
using Permutation = std::vector<int>;

std::string format_permutation(const Permutation& w);
/// Parses space- or comma-separated one-line notation and checks it is a bijection on 1..n.
Permutation parse_permutation(std::string_view text);

Permutation compose(const Permutation& x, const Permutation& y);
Permutation inverse(const Permutation& w);
int length(const Permutation& w);
Permutation identity_permutation(int n);
Permutation longest_element(int n);

/// s_i w for the simple reflection s_i = (i i+1), 1 ≤ i < n: swaps the values i and i+1.
Permutation left_multiply_simple(int i, const Permutation& w);
/// s_i w < w.
bool is_left_descent(int i, const Permutation& w);

/// Reduced word a_1 … a_k with w = s_{a_1} ⋯ s_{a_k}.
std::vector<int> reduced_word(const Permutation& w);
Permutation word_to_permutation(int n, const std::vector<int>& word);
/// Reads "1 2 1", "121", or "e"/"" for the identity.
std::vector<int> parse_word(std::string_view text);

/// Bruhat order by the rank-matrix criterion.
bool bruhat_leq(const Permutation& x, const Permutation& w);

/// S_n with elements sorted by (length, one-line lexicographic order).
class SymmetricGroup {
 public:
  explicit SymmetricGroup(int n);

  int rank() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const Permutation& operator[](std::size_t i) const { return elements_.at(i); }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t index_of(const Permutation& w) const;
  int length_of(std::size_t i) const { return lengths_.at(i); }
  /// Index of s_i w.
  std::size_t left_simple(int i, std::size_t w) const { return left_.at(w).at(i - 1); }
  bool leq(std::size_t x, std::size_t w) const { return bruhat_.at(x).at(w); }
  std::size_t identity_index() const { return 0; }
  std::size_t longest_index() const { return elements_.size() - 1; }

 private:
  int n_;
  std::vector<Permutation> elements_;
  std::vector<int> lengths_;
  std::map<Permutation, std::size_t> index_;
  std::vector<std::vector<std::size_t>> left_;
  std::vector<std::vector<bool>> bruhat_;
};

}  // namespace fiatcells
