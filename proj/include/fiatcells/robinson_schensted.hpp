#pragma once

#include <string>
#include <vector>

#include "fiatcells/permutation.hpp"

namespace fiatcells {

using Tableau = std::vector<std::vector<int>>;

struct TableauPair {
  Tableau p;  // insertion tableau
  Tableau q;  // recording tableau

  friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

/// Row insertion of w(1), …, w(n) into P; Q records the positions of new boxes.
TableauPair robinson_schensted(const Permutation& w);
/// Inverse of robinson_schensted. Throws std::invalid_argument on shapes that differ
/// or tableaux that are not standard.
Permutation inverse_robinson_schensted(const TableauPair& pair);

std::vector<int> shape(const Tableau& t);
bool is_standard(const Tableau& t);
/// Rows separated by " / ", e.g. "1 2 / 3".
std::string format_tableau(const Tableau& t);

}  // namespace fiatcells
