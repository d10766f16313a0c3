#include "fiatcells/cells.hpp"

#include <algorithm>
#include <deque>

namespace fiatcells {

std::string to_string(CellKind kind) {
  switch (kind) {
    case CellKind::left:
      return "left";
    case CellKind::right:
      return "right";
    case CellKind::two_sided:
      return "two-sided";
  }
  return "?";
}

CellKind parse_cell_kind(std::string_view text) {
  if (text == "left") {
    return CellKind::left;
  }
  if (text == "right") {
    return CellKind::right;
  }
  if (text == "two-sided") {
    return CellKind::two_sided;
  }
  throw std::invalid_argument("unknown cell kind '" + std::string(text) + "'");
}

namespace {

std::vector<std::vector<bool>> closure(const std::vector<std::vector<std::size_t>>& edges) {
  const auto n = edges.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t start = 0; start < n; ++start) {
    auto& seen = reach[start];
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (auto w : edges[v]) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  return reach;
}

CellPartition partition(CellKind kind, const std::vector<std::vector<bool>>& reach) {
  const auto n = reach.size();
  CellPartition out;
  out.kind = kind;
  constexpr auto unset = static_cast<std::size_t>(-1);
  out.class_of.assign(n, unset);
  for (std::size_t i = 0; i < n; ++i) {
    if (out.class_of[i] != unset) {
      continue;
    }
    auto id = out.classes.size();
    out.classes.emplace_back();
    for (std::size_t j = i; j < n; ++j) {
      if (reach[i][j] && reach[j][i]) {
        out.class_of[j] = id;
        out.classes.back().push_back(MorphId{j});
      }
    }
  }
  const auto k = out.classes.size();
  out.order.assign(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      out.order[a][b] = reach[out.classes[a].front().index][out.classes[b].front().index];
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b || !out.order[a][b]) {
        continue;
      }
      bool covered = true;
      for (std::size_t c = 0; c < k && covered; ++c) {
        if (c != a && c != b && out.order[a][c] && out.order[c][b]) {
          covered = false;
        }
      }
      if (covered) {
        out.hasse.emplace_back(a, b);
      }
    }
  }
  return out;
}

std::size_t slot(CellKind kind) { return static_cast<std::size_t>(kind); }

}  // namespace

CellEngine::CellEngine(const MultiCat& cat) : cat_(cat) {
  const auto n = cat.morph_count();
  std::vector<std::vector<std::size_t>> right(n);
  std::vector<std::vector<std::size_t>> left(n);
  for (auto g : cat.morph_ids()) {
    for (auto f : cat.morph_ids()) {
      if (!cat.composable(g, f)) {
        continue;
      }
      for (const auto& [k, mult] : cat.compose(g, f)) {
        right[f.index].push_back(k.index);
        left[g.index].push_back(k.index);
      }
    }
  }
  std::vector<std::vector<std::size_t>> both(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto* edges : {&right, &left}) {
      auto& e = (*edges)[i];
      std::sort(e.begin(), e.end());
      e.erase(std::unique(e.begin(), e.end()), e.end());
    }
    std::set_union(right[i].begin(), right[i].end(), left[i].begin(), left[i].end(),
                   std::back_inserter(both[i]));
  }
  reach_[slot(CellKind::left)] = closure(left);
  reach_[slot(CellKind::right)] = closure(right);
  reach_[slot(CellKind::two_sided)] = closure(both);
  for (auto kind : {CellKind::left, CellKind::right, CellKind::two_sided}) {
    partitions_[slot(kind)] = partition(kind, reach_[slot(kind)]);
  }
}

bool CellEngine::leq(CellKind kind, MorphId f, MorphId g) const {
  return reach_[slot(kind)].at(f.index).at(g.index);
}

const CellPartition& CellEngine::cells(CellKind kind) const { return partitions_[slot(kind)]; }

FactorizationCheck CellEngine::verify_order_factorization() const {
  FactorizationCheck out;
  const auto ids = cat_.morph_ids();
  for (auto f : ids) {
    for (auto g : ids) {
      bool via_right_left = false;
      bool via_left_right = false;
      for (auto l : ids) {
        via_right_left = via_right_left || (leq_R(f, l) && leq_L(l, g));
        via_left_right = via_left_right || (leq_L(f, l) && leq_R(l, g));
      }
      bool lr = leq_LR(f, g);
      if (lr != via_right_left || lr != via_left_right) {
        out.holds = false;
        out.counterexample = std::pair{f, g};
        out.detail = cat_.label(f) + " ≤_LR " + cat_.label(g) + " is " + (lr ? "true" : "false") +
                     ", via ≤_R then ≤_L " + (via_right_left ? "true" : "false") +
                     ", via ≤_L then ≤_R " + (via_left_right ? "true" : "false");
        return out;
      }
    }
  }
  return out;
}

std::vector<std::size_t> CellEngine::right_cells_in(std::size_t two_sided_class) const {
  const auto& members = cells(CellKind::two_sided).classes.at(two_sided_class);
  std::vector<std::size_t> out;
  for (auto m : members) {
    out.push_back(cells(CellKind::right).of(m));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> CellEngine::left_cells_in(std::size_t two_sided_class) const {
  const auto& members = cells(CellKind::two_sided).classes.at(two_sided_class);
  std::vector<std::size_t> out;
  for (auto m : members) {
    out.push_back(cells(CellKind::left).of(m));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RegularityVerdict CellEngine::classify_two_sided(std::size_t two_sided_class) const {
  const auto& two_sided = cells(CellKind::two_sided);
  if (two_sided_class >= two_sided.size()) {
    throw std::out_of_range("two-sided class " + std::to_string(two_sided_class) +
                            " out of range");
  }
  const auto& right = cells(CellKind::right);
  const auto& left = cells(CellKind::left);
  RegularityVerdict verdict;
  verdict.two_sided_class = two_sided_class;
  const auto rights = right_cells_in(two_sided_class);
  const auto lefts = left_cells_in(two_sided_class);

  verdict.regular = true;
  for (auto a : rights) {
    for (auto b : rights) {
      if (a != b && right.order[a][b]) {
        verdict.regular = false;
        verdict.witnesses.emplace_back(right[a].front(), right[b].front());
      }
    }
  }
  if (!verdict.regular) {
    return verdict;
  }

  verdict.strongly_regular = true;
  for (auto l : lefts) {
    for (auto r : rights) {
      std::vector<MorphId> meet;
      for (auto m : left[l]) {
        if (right.of(m) == r) {
          meet.push_back(m);
        }
      }
      if (meet.empty()) {
        verdict.strongly_regular = false;
        verdict.empty_intersections.emplace_back(l, r);
      } else if (meet.size() > 1) {
        verdict.strongly_regular = false;
        verdict.witnesses.emplace_back(meet[0], meet[1]);
      }
    }
  }
  return verdict;
}

bool CellEngine::acts_nonzero(MorphId f, MorphId g) const {
  if (cat_.src(f) != cat_.tgt(g)) {
    throw NotComposable(cat_.label(f) + " does not act on the simple of " + cat_.label(g) +
                        ": source of " + cat_.label(f) + " differs from target of " +
                        cat_.label(g));
  }
  return leq_L(cat_.star(f), g);
}

std::vector<MorphId> CellEngine::annihilator_of_simple(MorphId g) const {
  std::vector<MorphId> out;
  std::vector<bool> in(cat_.morph_count(), false);
  for (auto f : cat_.morph_ids()) {
    if (cat_.src(f) == cat_.tgt(g) && !acts_nonzero(f, g)) {
      out.push_back(f);
      in[f.index] = true;
    }
  }
  for (auto f : out) {
    for (auto k : cat_.morph_ids()) {
      if (leq_R(f, k) && !in[k.index]) {
        throw std::logic_error("annihilator of the simple of " + cat_.label(g) +
                               " is not a ≤_R coideal: " + cat_.label(f) + " ≤_R " +
                               cat_.label(k));
      }
    }
  }
  return out;
}

Integer CellEngine::comp_mult_principal(MorphId f, MorphId g, MorphId h) const {
  if (cat_.tgt(f) != cat_.tgt(h)) {
    throw NotComposable("star(" + cat_.label(f) + ")∘" + cat_.label(h) + " is not defined");
  }
  if (cat_.src(g) != cat_.src(h) || cat_.tgt(g) != cat_.src(f)) {
    throw NotComposable(cat_.label(g) + " is not in the hom category of star(" + cat_.label(f) +
                        ")∘" + cat_.label(h));
  }
  auto value = cat_.compose(cat_.star(f), h)[g];
  if (value != 0 && !leq_R(h, g)) {
    throw std::logic_error("nonzero multiplicity with " + cat_.label(h) + " ≰_R " +
                           cat_.label(g));
  }
  return value;
}

}  // namespace fiatcells
