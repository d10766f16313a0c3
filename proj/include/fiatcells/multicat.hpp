#pragma once

// Decategorified data of a fiat 2-category: objects, indecomposable
// 1-morphisms, the multiplicity table of horizontal composition, and the
// involution. Everything is integer valued; no 2-morphisms are modelled.

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fiatcells/numeric.hpp"

namespace fiatcells {

struct ObjectId {
  std::size_t index = 0;
  friend auto operator<=>(const ObjectId&, const ObjectId&) = default;
};

struct MorphId {
  std::size_t index = 0;
  friend auto operator<=>(const MorphId&, const MorphId&) = default;
};

/// Direct-sum decomposition: indecomposable 1-morphisms with positive multiplicities.
/// Entries are kept sorted by morph index; an empty multiset is the zero 1-morphism.
class Multiset {
 public:
  using Entry = std::pair<MorphId, Integer>;

  Multiset() = default;
  /// Merges repeated keys and drops zero multiplicities. Negative totals throw.
  explicit Multiset(std::vector<Entry> entries);

  static Multiset single(MorphId morph, const Integer& mult = 1);

  Integer operator[](MorphId morph) const;
  bool contains(MorphId morph) const;
  void add(MorphId morph, const Integer& mult);
  void add_scaled(const Multiset& other, const Integer& factor);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  Integer total() const;

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Entry>& entries() const { return entries_; }

  friend bool operator==(const Multiset& a, const Multiset& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Entry> entries_;
};

struct Morph {
  std::string label;
  ObjectId src;
  ObjectId tgt;
  bool is_identity = false;

  friend bool operator==(const Morph&, const Morph&) = default;
};

/// Structural problems that prevent building a table at all.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotComposable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MultiCat {
 public:
  std::size_t object_count() const { return objects_.size(); }
  std::size_t morph_count() const { return morphs_.size(); }

  const std::string& object_label(ObjectId object) const { return objects_.at(object.index); }
  const Morph& morph(MorphId id) const { return morphs_.at(id.index); }
  const std::string& label(MorphId id) const { return morph(id).label; }
  ObjectId src(MorphId id) const { return morph(id).src; }
  ObjectId tgt(MorphId id) const { return morph(id).tgt; }
  bool is_identity(MorphId id) const { return morph(id).is_identity; }

  std::optional<MorphId> find_morph(std::string_view label) const;
  std::optional<ObjectId> find_object(std::string_view label) const;
  /// Throws std::out_of_range naming the label when absent.
  MorphId morph_by_label(std::string_view label) const;

  MorphId identity(ObjectId object) const { return identity_of_.at(object.index); }
  MorphId star(MorphId id) const { return star_.at(id.index); }

  /// True when g∘f is defined, i.e. src(g) = tgt(f).
  bool composable(MorphId g, MorphId f) const { return src(g) == tgt(f); }

  /// g∘f. Identities are resolved by the unit law; otherwise the stored entry.
  Multiset compose(MorphId g, MorphId f) const;
  /// The raw table entry, including explicitly stored unit-law entries.
  const Multiset& stored(MorphId g, MorphId f) const;

  std::vector<MorphId> morph_ids() const;
  std::vector<ObjectId> object_ids() const;
  /// Indecomposables of C(from, to), in declaration order.
  std::vector<MorphId> hom(ObjectId from, ObjectId to) const;

  /// Applies the involution to every summand.
  Multiset star_of(const Multiset& set) const;

  friend bool operator==(const MultiCat& a, const MultiCat& b);

 private:
  friend class MultiCatBuilder;

  std::vector<std::string> objects_;
  std::vector<Morph> morphs_;
  std::vector<MorphId> identity_of_;
  std::vector<MorphId> star_;
  std::vector<Multiset> table_;  // row g, column f
  std::unordered_map<std::string, std::size_t> object_index_;
  std::unordered_map<std::string, std::size_t> morph_index_;
};

class MultiCatBuilder {
 public:
  ObjectId add_object(std::string label);
  MorphId add_morph(std::string label, ObjectId src, ObjectId tgt, bool identity = false);
  void set_star(MorphId morph, MorphId image);
  /// Records g∘f. Entries for non-composable pairs or duplicates throw StructureError.
  void set_compose(MorphId g, MorphId f, Multiset out);

  std::optional<ObjectId> find_object(std::string_view label) const;
  std::optional<MorphId> find_morph(std::string_view label) const;

  /// Fills omitted unit-law entries and omitted identity stars; checks that
  /// every object has exactly one identity and every morph has a star image.
  MultiCat build() &&;

 private:
  MultiCat cat_;
  std::vector<std::optional<MorphId>> star_;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Multiset>> compose_;
};

struct Violation {
  std::string law;
  std::string detail;
  std::vector<MorphId> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(std::string_view law) const;
};

/// Names of the laws checked by validate(), in report order.
const std::vector<std::string>& validation_laws();

/// Exhaustive check of the unit laws, composite typing, associativity over all
/// composable triples, and the involution axioms. Violations are data.
ValidationReport validate(const MultiCat& cat);

std::string format_multiset(const MultiCat& cat, const Multiset& set);

}  // namespace fiatcells
