#include "fiatcells/multicat.hpp"

#include <algorithm>
#include <sstream>

namespace fiatcells {

// ---------------------------------------------------------------- Multiset

Multiset::Multiset(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& [morph, mult] : entries) {
    if (!entries_.empty() && entries_.back().first == morph) {
      entries_.back().second += mult;
    } else {
      entries_.emplace_back(morph, std::move(mult));
    }
  }
  for (const auto& [morph, mult] : entries_) {
    if (mult < 0) {
      throw std::invalid_argument("negative multiplicity in multiset");
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return e.second == 0; });
}

Multiset Multiset::single(MorphId morph, const Integer& mult) {
  Multiset out;
  out.add(morph, mult);
  return out;
}

Integer Multiset::operator[](MorphId morph) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), morph,
                             [](const Entry& e, MorphId m) { return e.first < m; });
  if (it != entries_.end() && it->first == morph) {
    return it->second;
  }
  return 0;
}

bool Multiset::contains(MorphId morph) const { return (*this)[morph] != 0; }

void Multiset::add(MorphId morph, const Integer& mult) {
  if (mult == 0) {
    return;
  }
  auto it = std::lower_bound(entries_.begin(), entries_.end(), morph,
                             [](const Entry& e, MorphId m) { return e.first < m; });
  if (it != entries_.end() && it->first == morph) {
    it->second += mult;
    if (it->second < 0) {
      throw std::invalid_argument("negative multiplicity in multiset");
    }
    if (it->second == 0) {
      entries_.erase(it);
    }
    return;
  }
  if (mult < 0) {
    throw std::invalid_argument("negative multiplicity in multiset");
  }
  entries_.insert(it, Entry{morph, mult});
}

void Multiset::add_scaled(const Multiset& other, const Integer& factor) {
  if (factor == 0) {
    return;
  }
  for (const auto& [morph, mult] : other.entries_) {
    add(morph, mult * factor);
  }
}

Integer Multiset::total() const {
  Integer sum = 0;
  for (const auto& entry : entries_) {
    sum += entry.second;
  }
  return sum;
}

// ---------------------------------------------------------------- MultiCat

std::optional<MorphId> MultiCat::find_morph(std::string_view label) const {
  auto it = morph_index_.find(std::string(label));
  if (it == morph_index_.end()) {
    return std::nullopt;
  }
  return MorphId{it->second};
}

std::optional<ObjectId> MultiCat::find_object(std::string_view label) const {
  auto it = object_index_.find(std::string(label));
  if (it == object_index_.end()) {
    return std::nullopt;
  }
  return ObjectId{it->second};
}

MorphId MultiCat::morph_by_label(std::string_view label) const {
  if (auto id = find_morph(label)) {
    return *id;
  }
  throw std::out_of_range("unknown 1-morphism '" + std::string(label) + "'");
}

Multiset MultiCat::compose(MorphId g, MorphId f) const {
  if (!composable(g, f)) {
    throw NotComposable("cannot compose " + label(g) + " after " + label(f) +
                        ": source of " + label(g) + " differs from target of " + label(f));
  }
  if (is_identity(g)) {
    return Multiset::single(f);
  }
  if (is_identity(f)) {
    return Multiset::single(g);
  }
  return stored(g, f);
}

const Multiset& MultiCat::stored(MorphId g, MorphId f) const {
  return table_.at(g.index * morphs_.size() + f.index);
}

std::vector<MorphId> MultiCat::morph_ids() const {
  std::vector<MorphId> ids;
  ids.reserve(morphs_.size());
  for (std::size_t i = 0; i < morphs_.size(); ++i) {
    ids.push_back(MorphId{i});
  }
  return ids;
}

std::vector<ObjectId> MultiCat::object_ids() const {
  std::vector<ObjectId> ids;
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    ids.push_back(ObjectId{i});
  }
  return ids;
}

std::vector<MorphId> MultiCat::hom(ObjectId from, ObjectId to) const {
  std::vector<MorphId> out;
  for (std::size_t i = 0; i < morphs_.size(); ++i) {
    if (morphs_[i].src == from && morphs_[i].tgt == to) {
      out.push_back(MorphId{i});
    }
  }
  return out;
}

Multiset MultiCat::star_of(const Multiset& set) const {
  std::vector<Multiset::Entry> entries;
  for (const auto& [morph, mult] : set) {
    entries.emplace_back(star(morph), mult);
  }
  return Multiset(std::move(entries));
}

bool operator==(const MultiCat& a, const MultiCat& b) {
  return a.objects_ == b.objects_ && a.morphs_ == b.morphs_ && a.identity_of_ == b.identity_of_ &&
         a.star_ == b.star_ && a.table_ == b.table_;
}

// ---------------------------------------------------------------- Builder

ObjectId MultiCatBuilder::add_object(std::string label) {
  if (cat_.object_index_.count(label) != 0) {
    throw StructureError("duplicate object label '" + label + "'");
  }
  ObjectId id{cat_.objects_.size()};
  cat_.object_index_.emplace(label, id.index);
  cat_.objects_.push_back(std::move(label));
  return id;
}

MorphId MultiCatBuilder::add_morph(std::string label, ObjectId src, ObjectId tgt, bool identity) {
  if (src.index >= cat_.objects_.size() || tgt.index >= cat_.objects_.size()) {
    throw StructureError("1-morphism '" + label + "' refers to an undeclared object");
  }
  if (cat_.morph_index_.count(label) != 0) {
    throw StructureError("duplicate 1-morphism label '" + label + "'");
  }
  if (identity && src != tgt) {
    throw StructureError("identity '" + label + "' must have equal source and target");
  }
  if (identity) {
    for (const auto& m : cat_.morphs_) {
      if (m.is_identity && m.src == src) {
        throw StructureError("duplicate identity for object '" + cat_.objects_[src.index] +
                             "': '" + m.label + "' and '" + label + "'");
      }
    }
  }
  MorphId id{cat_.morphs_.size()};
  cat_.morph_index_.emplace(label, id.index);
  cat_.morphs_.push_back(Morph{std::move(label), src, tgt, identity});
  star_.emplace_back();
  return id;
}

void MultiCatBuilder::set_star(MorphId morph, MorphId image) {
  if (morph.index >= star_.size() || image.index >= star_.size()) {
    throw StructureError("star refers to an undeclared 1-morphism");
  }
  if (star_[morph.index].has_value()) {
    throw StructureError("star of '" + cat_.morphs_[morph.index].label + "' given twice");
  }
  star_[morph.index] = image;
}

void MultiCatBuilder::set_compose(MorphId g, MorphId f, Multiset out) {
  const auto n = cat_.morphs_.size();
  if (g.index >= n || f.index >= n) {
    throw StructureError("composition refers to an undeclared 1-morphism");
  }
  for (const auto& [morph, mult] : out) {
    if (morph.index >= n) {
      throw StructureError("composition result refers to an undeclared 1-morphism");
    }
  }
  const auto& mg = cat_.morphs_[g.index];
  const auto& mf = cat_.morphs_[f.index];
  if (mg.src != mf.tgt) {
    throw StructureError("composition " + mg.label + "∘" + mf.label +
                         " is not defined: source of " + mg.label + " differs from target of " +
                         mf.label);
  }
  for (const auto& entry : compose_) {
    if (entry.first == std::pair{g.index, f.index}) {
      throw StructureError("composition " + mg.label + "∘" + mf.label + " given twice");
    }
  }
  compose_.emplace_back(std::pair{g.index, f.index}, std::move(out));
}

std::optional<ObjectId> MultiCatBuilder::find_object(std::string_view label) const {
  return cat_.find_object(label);
}

std::optional<MorphId> MultiCatBuilder::find_morph(std::string_view label) const {
  return cat_.find_morph(label);
}

MultiCat MultiCatBuilder::build() && {
  if (cat_.objects_.empty()) {
    throw StructureError("no objects");
  }
  const auto n = cat_.morphs_.size();
  cat_.identity_of_.assign(cat_.objects_.size(), MorphId{n});
  for (std::size_t i = 0; i < n; ++i) {
    if (cat_.morphs_[i].is_identity) {
      cat_.identity_of_[cat_.morphs_[i].src.index] = MorphId{i};
    }
  }
  for (std::size_t o = 0; o < cat_.objects_.size(); ++o) {
    if (cat_.identity_of_[o].index == n) {
      throw StructureError("object '" + cat_.objects_[o] + "' has no identity 1-morphism");
    }
  }
  cat_.star_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (star_[i]) {
      cat_.star_[i] = *star_[i];
    } else if (cat_.morphs_[i].is_identity) {
      cat_.star_[i] = MorphId{i};
    } else {
      throw StructureError("star of '" + cat_.morphs_[i].label + "' is not given");
    }
  }
  cat_.table_.assign(n * n, Multiset{});
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t f = 0; f < n; ++f) {
      if (cat_.morphs_[g].src != cat_.morphs_[f].tgt) {
        continue;
      }
      if (cat_.morphs_[g].is_identity) {
        cat_.table_[g * n + f] = Multiset::single(MorphId{f});
      } else if (cat_.morphs_[f].is_identity) {
        cat_.table_[g * n + f] = Multiset::single(MorphId{g});
      }
    }
  }
  for (auto& [key, out] : compose_) {
    cat_.table_[key.first * n + key.second] = std::move(out);
  }
  return std::move(cat_);
}

// ---------------------------------------------------------------- validate

bool ValidationReport::has(std::string_view law) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.law == law; });
}

const std::vector<std::string>& validation_laws() {
  static const std::vector<std::string> laws = {
      "composite-type", "unit-law",        "associativity",         "star-src-tgt",
      "star-involution", "star-identity", "star-anti-automorphism"};
  return laws;
}

std::string format_multiset(const MultiCat& cat, const Multiset& set) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [morph, mult] : set) {
    out << (first ? "" : ", ") << cat.label(morph) << ":" << mult.get_str();
    first = false;
  }
  out << "}";
  return out.str();
}

namespace {

std::string composite_name(const MultiCat& cat, std::initializer_list<MorphId> ids) {
  std::string out;
  for (auto id : ids) {
    out += (out.empty() ? "" : "∘") + cat.label(id);
  }
  return out;
}

}  // namespace

ValidationReport validate(const MultiCat& cat) {
  ValidationReport report;
  auto add = [&](std::string law, std::string detail, std::vector<MorphId> witness) {
    report.violations.push_back(Violation{std::move(law), std::move(detail), std::move(witness)});
  };
  const auto ids = cat.morph_ids();

  for (auto g : ids) {
    for (auto f : ids) {
      if (!cat.composable(g, f)) {
        continue;
      }
      for (const auto& [h, mult] : cat.stored(g, f)) {
        if (cat.src(h) != cat.src(f) || cat.tgt(h) != cat.tgt(g)) {
          add("composite-type",
              "summand " + cat.label(h) + " of " + composite_name(cat, {g, f}) +
                  " has the wrong source or target",
              {g, f, h});
        }
      }
    }
  }

  for (auto f : ids) {
    auto left = cat.identity(cat.tgt(f));
    auto right = cat.identity(cat.src(f));
    if (cat.stored(left, f) != Multiset::single(f)) {
      add("unit-law",
          composite_name(cat, {left, f}) + " = " + format_multiset(cat, cat.stored(left, f)) +
              ", expected {" + cat.label(f) + ":1}",
          {left, f});
    }
    if (cat.stored(f, right) != Multiset::single(f)) {
      add("unit-law",
          composite_name(cat, {f, right}) + " = " + format_multiset(cat, cat.stored(f, right)) +
              ", expected {" + cat.label(f) + ":1}",
          {f, right});
    }
  }

  for (auto h : ids) {
    for (auto g : ids) {
      if (!cat.composable(h, g)) {
        continue;
      }
      const auto& hg = cat.stored(h, g);
      for (auto f : ids) {
        if (!cat.composable(g, f)) {
          continue;
        }
        const auto& gf = cat.stored(g, f);
        Multiset lhs;
        for (const auto& [k, mult] : hg) {
          if (cat.composable(k, f)) {
            lhs.add_scaled(cat.stored(k, f), mult);
          }
        }
        Multiset rhs;
        for (const auto& [k, mult] : gf) {
          if (cat.composable(h, k)) {
            rhs.add_scaled(cat.stored(h, k), mult);
          }
        }
        if (lhs != rhs) {
          add("associativity",
              "(" + composite_name(cat, {h, g}) + ")∘" + cat.label(f) + " = " +
                  format_multiset(cat, lhs) + " but " + cat.label(h) + "∘(" +
                  composite_name(cat, {g, f}) + ") = " + format_multiset(cat, rhs),
              {h, g, f});
        }
      }
    }
  }

  for (auto f : ids) {
    auto s = cat.star(f);
    if (cat.src(s) != cat.tgt(f) || cat.tgt(s) != cat.src(f)) {
      add("star-src-tgt",
          "star(" + cat.label(f) + ") = " + cat.label(s) + " does not swap source and target",
          {f, s});
    }
    if (cat.star(s) != f) {
      add("star-involution",
          "star(star(" + cat.label(f) + ")) = " + cat.label(cat.star(s)), {f, s});
    }
    if (cat.is_identity(f) != cat.is_identity(s) || (cat.is_identity(f) && s != f)) {
      add("star-identity",
          "star must fix identities and send non-identities to non-identities; star(" +
              cat.label(f) + ") = " + cat.label(s),
          {f, s});
    }
  }

  for (auto g : ids) {
    for (auto f : ids) {
      if (!cat.composable(g, f)) {
        continue;
      }
      auto sf = cat.star(f);
      auto sg = cat.star(g);
      if (!cat.composable(sf, sg)) {
        add("star-anti-automorphism",
            "star(" + cat.label(f) + ")∘star(" + cat.label(g) + ") is not defined", {g, f});
        continue;
      }
      auto lhs = cat.star_of(cat.stored(g, f));
      const auto& rhs = cat.stored(sf, sg);
      if (lhs != rhs) {
        add("star-anti-automorphism",
            "star(" + composite_name(cat, {g, f}) + ") = " + format_multiset(cat, lhs) + " but " +
                composite_name(cat, {sf, sg}) + " = " + format_multiset(cat, rhs),
            {g, f});
      }
    }
  }

  const auto& order = validation_laws();
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [&](const Violation& a, const Violation& b) {
                     auto pa = std::find(order.begin(), order.end(), a.law);
                     auto pb = std::find(order.begin(), order.end(), b.law);
                     return pa < pb;
                   });
  return report;
}

}  // namespace fiatcells
