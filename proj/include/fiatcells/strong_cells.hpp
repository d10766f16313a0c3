#pragma once

// Invariants of strongly regular two-sided cells: Duflo elements, m-coefficients,
// Cartan blocks of cell 2-representations, restriction to a cell, and the lint.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fiatcells/cells.hpp"

namespace fiatcells {

/// Raised when an operation needs a strongly regular cell, or when the table
/// contradicts an identity that holds in every fiat category.
class CellError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The unique self-dual element of a right cell inside a strongly regular two-sided cell.
MorphId duflo_element(const CellEngine& engine, std::size_t right_class);

struct MCoeff {
  std::optional<MorphId> target;
  Integer m = 0;
};

/// star(H)∘F = m·G with {G} = L_{star H} ∩ R_F, ignoring summands in cells
/// strictly above. Requires F, H in one strongly regular two-sided cell and
/// tgt(F) = tgt(H). Impure composites throw CellError.
MCoeff m_coeff(const CellEngine& engine, MorphId f, MorphId h);

struct MTable {
  std::size_t cell = 0;
  /// Keyed by (F, H) over all pairs of the cell with tgt(F) = tgt(H).
  std::map<std::pair<MorphId, MorphId>, MCoeff> m;
  /// Right class index → Duflo element.
  std::map<std::size_t, MorphId> duflo;

  const Integer& diagonal(MorphId f) const { return m.at({f, f}).m; }
};

MTable m_table(const CellEngine& engine, std::size_t two_sided_class);

struct LeftConstancy {
  bool holds = true;
  std::optional<std::size_t> witness_left_cell;
  std::vector<MorphId> witness;
};

/// Whether F ↦ m_{F,F} is constant on each left cell of the two-sided cell.
LeftConstancy check_left_constancy(const CellEngine& engine, std::size_t two_sided_class);

struct CartanBlock {
  std::size_t right_cell = 0;
  ObjectId target;
  std::vector<MorphId> basis;
  /// matrix[h][f] = compose(star(H), F)[duflo(R)] for basis elements H, F.
  std::vector<std::vector<Integer>> matrix;
};

/// Block of the cell 2-representation for R at object j. Throws CellError when R ∩ C(i,j) is empty.
CartanBlock cartan_matrix(const CellEngine& engine, std::size_t right_class, ObjectId target);
/// Blocks at every object where R has elements, in object order.
std::vector<CartanBlock> cartan_blocks(const CellEngine& engine, std::size_t right_class);

/// Lexicographically least form of a square matrix under simultaneous row/column permutation.
std::vector<std::vector<Integer>> canonical_block(const std::vector<std::vector<Integer>>& matrix);

struct BlockAgreement {
  bool agree = true;
  std::string detail;
};

/// Compares the multisets of canonical Cartan blocks across the right cells of a two-sided cell.
BlockAgreement cartan_blocks_agree(const CellEngine& engine, std::size_t two_sided_class);

struct DiscardedSummand {
  MorphId g;
  MorphId f;
  MorphId summand;
  Integer mult;
};

struct CellRestriction {
  MultiCat cat;
  /// Morph of the restricted table → morph of the original table.
  std::vector<MorphId> kept;
  std::vector<DiscardedSummand> discarded;
};

/// Restriction to identities ∪ Q. Summands outside that set are dropped; each
/// dropped summand is asserted to lie strictly above Q, and Q is asserted to
/// remain one two-sided cell of the result.
CellRestriction cell_subcategory(const CellEngine& engine, std::size_t two_sided_class);

enum class CheckStatus { pass, fail, not_applicable };
std::string to_string(CheckStatus status);

struct LintCheck {
  std::string id;
  std::string description;
  CheckStatus status = CheckStatus::not_applicable;
  std::vector<std::string> witnesses;
};

struct LintReport {
  std::vector<LintCheck> checks;
  bool fiat_certified_impossible = false;

  const LintCheck& check(std::string_view id) const;
  bool all_pass() const { return !fiat_certified_impossible; }
};

/// Identifiers of every lint check, in report order.
const std::vector<std::string>& lint_check_ids();

/// Runs the validation laws and every necessary condition for the table to
/// come from a fiat category. Failures are data; nothing throws on bad input.
LintReport fiat_lint(const MultiCat& cat);

}  // namespace fiatcells
