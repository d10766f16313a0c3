#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fiatcells/multicat.hpp"

namespace fiatcells {

enum class CellKind { left, right, two_sided };

std::string to_string(CellKind kind);
/// Accepts "left", "right", "two-sided". Throws std::invalid_argument otherwise.
CellKind parse_cell_kind(std::string_view text);

struct CellPartition {
  CellKind kind = CellKind::right;
  /// Classes ordered by their smallest member; members in declaration order.
  std::vector<std::vector<MorphId>> classes;
  std::vector<std::size_t> class_of;
  /// order[a][b]: every member of class a is ≤ every member of class b.
  std::vector<std::vector<bool>> order;
  /// Covering relations (lower, upper) of the induced partial order.
  std::vector<std::pair<std::size_t, std::size_t>> hasse;

  std::size_t size() const { return classes.size(); }
  const std::vector<MorphId>& operator[](std::size_t i) const { return classes.at(i); }
  std::size_t of(MorphId m) const { return class_of.at(m.index); }
};

struct FactorizationCheck {
  bool holds = true;
  std::optional<std::pair<MorphId, MorphId>> counterexample;
  std::string detail;
};

struct RegularityVerdict {
  std::size_t two_sided_class = 0;
  bool regular = false;
  bool strongly_regular = false;
  /// Pairs (F, G) in distinct right cells with F ≤_R G, or two elements of one L∩R.
  std::vector<std::pair<MorphId, MorphId>> witnesses;
  /// (left class, right class) pairs inside a regular cell whose intersection is empty.
  std::vector<std::pair<std::size_t, std::size_t>> empty_intersections;
};

/// Reachability closures of the three preorders, computed once per table.
/// F ≤_R G: G is a summand of H∘F for some H. F ≤_L G: G is a summand of F∘H.
/// ≤_LR is generated by both. All three are reflexive.
class CellEngine {
 public:
  explicit CellEngine(const MultiCat& cat);

  const MultiCat& cat() const { return cat_; }

  bool leq(CellKind kind, MorphId f, MorphId g) const;
  bool leq_R(MorphId f, MorphId g) const { return leq(CellKind::right, f, g); }
  bool leq_L(MorphId f, MorphId g) const { return leq(CellKind::left, f, g); }
  bool leq_LR(MorphId f, MorphId g) const { return leq(CellKind::two_sided, f, g); }
  bool equivalent(CellKind kind, MorphId f, MorphId g) const {
    return leq(kind, f, g) && leq(kind, g, f);
  }

  const CellPartition& cells(CellKind kind) const;

  FactorizationCheck verify_order_factorization() const;

  /// Throws std::out_of_range for a bad class index.
  RegularityVerdict classify_two_sided(std::size_t two_sided_class) const;

  /// Right cells (resp. left cells) contained in a two-sided class.
  std::vector<std::size_t> right_cells_in(std::size_t two_sided_class) const;
  std::vector<std::size_t> left_cells_in(std::size_t two_sided_class) const;

  /// Whether F·L_G is nonzero in the principal 2-representation: star(F) ≤_L G.
  /// Requires src(F) = tgt(G); throws NotComposable otherwise.
  bool acts_nonzero(MorphId f, MorphId g) const;

  /// All F with src(F) = tgt(G) that kill the simple L_G. Throws std::logic_error
  /// if the result is not a coideal for ≤_R.
  std::vector<MorphId> annihilator_of_simple(MorphId g) const;

  /// [F·L_G : L_H] = compose(star(F), H)[G]. Requires tgt(F) = tgt(H) and
  /// G ∈ C(src H, src F). Throws std::logic_error if a nonzero value has H ≰_R G.
  Integer comp_mult_principal(MorphId f, MorphId g, MorphId h) const;

 private:
  const MultiCat& cat_;
  std::vector<std::vector<bool>> reach_[3];
  CellPartition partitions_[3];
};

}  // namespace fiatcells
