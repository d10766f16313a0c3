#pragma once

// Finite-dimensional algebras and bimodules over the rationals, given by
// structure constants and action matrices. Vectors are coordinate columns.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fiatcells/constructors.hpp"
#include "fiatcells/multicat.hpp"
#include "fiatcells/rational_matrix.hpp"

namespace fiatcells {

class BimoduleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Algebra {
  std::string name;
  std::vector<std::string> basis;
  /// products[a][b] = coordinates of basis[a]·basis[b].
  std::vector<std::vector<Vector>> products;
  Vector unit;
  /// Orthogonal primitive idempotents summing to the unit (given, not computed).
  std::vector<Vector> idempotents;

  std::size_t dim() const { return basis.size(); }
  Vector multiply(const Vector& u, const Vector& v) const;
  /// Matrix of u ↦ a·u and of u ↦ u·a.
  Matrix left_regular(const Vector& a) const;
  Matrix right_regular(const Vector& a) const;
  Vector basis_vector(std::size_t i) const;

  /// Throws BimoduleError on non-associativity, a wrong unit, or bad idempotents.
  void check() const;
  /// dim f·A·e for idempotent indices f, e.
  std::size_t pairing(std::size_t f, std::size_t e) const;
  /// The matrix (dim f A e) over all pairs of idempotents.
  std::vector<std::vector<Integer>> cartan_matrix() const;
};

Algebra field_algebra();
/// ℚ[x]/(x²) with basis {1, x} and the single idempotent 1.
Algebra dual_numbers();

Algebra parse_algebra(std::string_view json_text);
/// Reads {"algebras": [...]} or a bare list.
std::vector<Algebra> parse_algebra_list(std::string_view json_text);

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct Bimodule {
  std::string name;
  AlgebraPtr left;
  AlgebraPtr right;
  std::size_t dim = 0;
  /// left_action[a]: matrix of m ↦ basis[a]·m.
  std::vector<Matrix> left_action;
  /// right_action[b]: matrix of m ↦ m·basis[b]; so R_{bb'} = R_{b'} R_b.
  std::vector<Matrix> right_action;

  /// Throws BimoduleError unless both actions are unital, associative and commute.
  void check() const;
  Matrix left_of(const Vector& a) const;
  Matrix right_of(const Vector& b) const;
};

/// A as an A-A bimodule.
Bimodule regular_bimodule(const AlgebraPtr& algebra);
/// A f ⊗_ℚ e B for idempotent indices f of A and e of B.
Bimodule projective_bimodule(const AlgebraPtr& a, std::size_t f, const AlgebraPtr& b,
                             std::size_t e);
Bimodule direct_sum(const Bimodule& m, const Bimodule& n);

/// Reads {"kind": "regular"|"projective"|"explicit", ...}; see README.
Bimodule parse_bimodule(std::string_view json_text);

class DimensionCapExceeded : public BimoduleError {
 public:
  using BimoduleError::BimoduleError;
};

constexpr std::size_t default_tensor_cap = 4096;

/// M ⊗_B N as the cokernel of the balancing map. Throws DimensionCapExceeded
/// when dim M · dim N exceeds the cap, BimoduleError on mismatched algebras.
Bimodule tensor_over(const Bimodule& m, const Bimodule& n, std::size_t cap = default_tensor_cap);

/// Basis of bimodule maps M → N, each a dim N × dim M matrix.
std::vector<Matrix> hom_space(const Bimodule& m, const Bimodule& n);
bool is_bimodule_map(const Bimodule& m, const Bimodule& n, const Matrix& map);

/// End(M) is local: the trace form on End(M) has rank 1 (characteristic 0).
bool has_local_endomorphisms(const Bimodule& m);

class DecompositionError : public BimoduleError {
 public:
  using BimoduleError::BimoduleError;
};

/// Multiplicities of the candidates in M from the hom-count Gram system.
/// Throws DecompositionError when a candidate is not local, two candidates are
/// isomorphic, or no unique nonnegative integer solution matches dim M.
std::vector<Integer> decompose_against(const Bimodule& m, const std::vector<Bimodule>& candidates);

struct RelationCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct QuiverReport {
  std::vector<RelationCheck> checks;
  /// dim End(F), dim Hom(F,1), dim Hom(1,F), dim End(1) for F = D⊗D over the dual numbers D.
  std::size_t end_f = 0;
  std::size_t hom_f_1 = 0;
  std::size_t hom_1_f = 0;
  std::size_t end_1 = 0;
  bool all_hold() const;
};

/// Builds α: D⊗D → D (1⊗1 ↦ 1), β: D → D⊗D (1 ↦ 1⊗x + x⊗1) and
/// γ: D⊗D → D⊗D (1⊗1 ↦ 1⊗x − x⊗1) and checks αγ = 0, γβ = 0,
/// γ² = −(βα)², (αβ)² = 0 with αβ ≠ 0, and that each is a bimodule map.
QuiverReport verify_dual_numbers_quiver();

struct RealizedCA {
  MultiCat cat;
  CartanData cartan;
  /// Bimodule of each morph, in morph order.
  std::vector<Bimodule> bimodules;
};

/// Builds every projective and identity bimodule over the blocks, tensors all
/// composable pairs and decomposes the results. Throws BimoduleError when a
/// Cartan pairing is asymmetric or a decomposition fails.
RealizedCA realize_CA(const std::vector<Algebra>& algebras, std::size_t cap = default_tensor_cap);

}  // namespace fiatcells
