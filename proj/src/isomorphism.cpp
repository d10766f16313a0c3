#include "fiatcells/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace fiatcells {

namespace {

// Relabeling-invariant fingerprint of a morph, used to prune candidates.
std::vector<std::string> fingerprints(const MultiCat& cat) {
  std::vector<std::string> out;
  for (auto f : cat.morph_ids()) {
    std::vector<std::string> left;
    std::vector<std::string> right;
    for (auto g : cat.morph_ids()) {
      if (cat.composable(g, f)) {
        left.push_back(cat.compose(g, f).total().get_str());
      }
      if (cat.composable(f, g)) {
        right.push_back(cat.compose(f, g).total().get_str());
      }
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    std::string key = cat.is_identity(f) ? "I" : "M";
    key += cat.star(f) == f ? "s" : "n";
    key += cat.src(f) == cat.tgt(f) ? "e" : "x";
    if (cat.composable(f, f)) {
      key += ":" + cat.compose(f, f).total().get_str();
    }
    for (const auto& s : left) {
      key += "," + s;
    }
    key += "|";
    for (const auto& s : right) {
      key += "," + s;
    }
    out.push_back(std::move(key));
  }
  return out;
}

class Search {
 public:
  Search(const MultiCat& a, const MultiCat& b, std::vector<ObjectId> objects)
      : a_(a), b_(b), fa_(fingerprints(a)), fb_(fingerprints(b)) {
    iso_.objects = std::move(objects);
    assigned_.assign(a.morph_count(), false);
    used_.assign(b.morph_count(), false);
    iso_.morphs.assign(a.morph_count(), MorphId{});
  }

  std::optional<Isomorphism> run() {
    if (extend(0)) {
      return iso_;
    }
    return std::nullopt;
  }

 private:
  bool consistent(MorphId x) const {
    auto y = iso_.morphs[x.index];
    auto sx = a_.star(x);
    if (assigned_[sx.index] && iso_.morphs[sx.index] != b_.star(y)) {
      return false;
    }
    for (std::size_t i = 0; i < a_.morph_count(); ++i) {
      if (!assigned_[i]) {
        continue;
      }
      MorphId other{i};
      for (auto [g, f] : {std::pair{x, other}, std::pair{other, x}}) {
        if (!a_.composable(g, f)) {
          continue;
        }
        auto lhs = a_.compose(g, f);
        auto rhs = b_.compose(iso_.morphs[g.index], iso_.morphs[f.index]);
        if (lhs.total() != rhs.total()) {
          return false;
        }
        for (const auto& [k, mult] : lhs) {
          if (assigned_[k.index] && rhs[iso_.morphs[k.index]] != mult) {
            return false;
          }
        }
        for (const auto& [k, mult] : rhs) {
          for (std::size_t j = 0; j < a_.morph_count(); ++j) {
            if (assigned_[j] && iso_.morphs[j] == k && lhs[MorphId{j}] != mult) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  bool complete() const {
    for (auto g : a_.morph_ids()) {
      if (iso_.morphs[a_.star(g).index] != b_.star(iso_.morphs[g.index])) {
        return false;
      }
      for (auto f : a_.morph_ids()) {
        if (!a_.composable(g, f)) {
          continue;
        }
        Multiset mapped;
        for (const auto& [k, mult] : a_.compose(g, f)) {
          mapped.add(iso_.morphs[k.index], mult);
        }
        if (mapped != b_.compose(iso_.morphs[g.index], iso_.morphs[f.index])) {
          return false;
        }
      }
    }
    return true;
  }

  bool extend(std::size_t next) {
    if (next == a_.morph_count()) {
      return complete();
    }
    MorphId x{next};
    for (auto y : b_.morph_ids()) {
      if (used_[y.index] || fa_[x.index] != fb_[y.index] ||
          iso_.objects[a_.src(x).index] != b_.src(y) ||
          iso_.objects[a_.tgt(x).index] != b_.tgt(y)) {
        continue;
      }
      iso_.morphs[x.index] = y;
      assigned_[x.index] = true;
      used_[y.index] = true;
      if (consistent(x) && extend(next + 1)) {
        return true;
      }
      assigned_[x.index] = false;
      used_[y.index] = false;
    }
    return false;
  }

  const MultiCat& a_;
  const MultiCat& b_;
  std::vector<std::string> fa_;
  std::vector<std::string> fb_;
  Isomorphism iso_;
  std::vector<bool> assigned_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<Isomorphism> find_isomorphism(const MultiCat& a, const MultiCat& b) {
  if (a.object_count() != b.object_count() || a.morph_count() != b.morph_count()) {
    return std::nullopt;
  }
  std::vector<std::size_t> perm(a.object_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<ObjectId> objects;
    for (auto p : perm) {
      objects.push_back(ObjectId{p});
    }
    if (auto found = Search(a, b, std::move(objects)).run()) {
      return found;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace fiatcells
