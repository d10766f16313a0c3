#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fiatcells/multicat.hpp"
#include "fiatcells/robinson_schensted.hpp"

namespace fiatcells {

/// One object, identity "1" and F with F∘F = 2F.
MultiCat make_s2();

/// Objects i, j; 1_i, 1_j, theta_on: i→j, theta_out: j→i, theta = theta_out∘theta_on.
MultiCat make_sl2_singular();

/// Cartan matrices of the blocks of a basic algebra: components[t][f][e] = dim f A_t e.
struct CartanData {
  std::vector<std::vector<std::vector<Integer>>> components;

  /// Throws std::invalid_argument unless every matrix is square, symmetric,
  /// nonnegative with positive diagonal, and there is at least one component.
  void check() const;
  std::size_t vertex_count() const;
  friend bool operator==(const CartanData&, const CartanData&) = default;
};

/// Reads {"components": [matrix, ...]} or a bare list of matrices.
CartanData parse_cartan_data(std::string_view json_text);
std::string format_cartan_data(const CartanData& data);

/// Random connected symmetric Cartan data: 1..max_components blocks of 1..max_vertices
/// vertices, diagonal 1..max_entry, off-diagonal 0..max_entry.
CartanData random_cartan_data(std::mt19937_64& rng, int max_components = 3, int max_vertices = 3,
                              int max_entry = 3);

/// Projective-functor category: objects "1".."k", identities "1_t", and P[f,e]
/// (vertex labels e1, e2, … numbered across components) modelling Af⊗eA with
/// source the block of e and target the block of f. A block equal to [1] has
/// its identity merged with its unique projective morph.
MultiCat make_CA(const CartanData& data);

/// Label of the morph modelling Af⊗eA for global vertex numbers f, e (1-based).
std::string ca_label(std::size_t f, std::size_t e);

/// One object; theta_w for w ∈ S_n with compose(theta_x, theta_y) read off the
/// KL-basis structure constants at v = 1 and star(theta_w) = theta_{w⁻¹}.
/// Throws std::invalid_argument unless 2 ≤ n ≤ max_n; throws std::logic_error if a
/// structure constant has a negative coefficient.
MultiCat make_hecke(int n, int max_n = 5);
std::string hecke_label(const Permutation& w);

struct RsCellReport {
  int n = 0;
  std::size_t right_cells = 0;
  std::size_t left_cells = 0;
  std::size_t two_sided_cells = 0;
  std::size_t standard_tableaux = 0;
  /// "insertion", "recording", or "none": the tableau whose fibers are the cells.
  std::string right_cells_by;
  std::string left_cells_by;
  bool two_sided_by_shape = false;

  bool consistent() const {
    return right_cells_by != "none" && left_cells_by != "none" && right_cells_by != left_cells_by &&
           two_sided_by_shape && right_cells == standard_tableaux;
  }
};

RsCellReport rs_cell_check(int n, int max_n = 5);

}  // namespace fiatcells
