#include "fiatcells/strong_cells.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fiatcells {

namespace {

std::size_t two_sided_of(const CellEngine& engine, MorphId m) {
  return engine.cells(CellKind::two_sided).of(m);
}

// Summands of a composite of cell members lie in the cell or strictly above
// it; the ones above act as zero on the cell 2-representation and are dropped.
Multiset in_cell(const CellEngine& engine, const Multiset& composite, std::size_t q) {
  Multiset kept;
  for (const auto& [k, mult] : composite) {
    if (two_sided_of(engine, k) == q) {
      kept.add(k, mult);
    }
  }
  return kept;
}

void require_strongly_regular(const CellEngine& engine, std::size_t two_sided_class) {
  if (!engine.classify_two_sided(two_sided_class).strongly_regular) {
    const auto& members = engine.cells(CellKind::two_sided)[two_sided_class];
    throw CellError("two-sided cell containing " + engine.cat().label(members.front()) +
                    " is not strongly regular");
  }
}

// The unique element of L ∩ R, if any.
std::optional<MorphId> meet(const CellEngine& engine, std::size_t left_class,
                            std::size_t right_class) {
  const auto& right = engine.cells(CellKind::right);
  for (auto m : engine.cells(CellKind::left)[left_class]) {
    if (right.of(m) == right_class) {
      return m;
    }
  }
  return std::nullopt;
}

std::string label_set(const MultiCat& cat, const std::vector<MorphId>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out += (i ? ", " : "") + cat.label(ids[i]);
  }
  return out + "}";
}

std::string format_matrix(const std::vector<std::vector<Integer>>& matrix) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    out << (i ? ", " : "") << "[";
    for (std::size_t j = 0; j < matrix[i].size(); ++j) {
      out << (j ? ", " : "") << matrix[i][j].get_str();
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace

MorphId duflo_element(const CellEngine& engine, std::size_t right_class) {
  const auto& cat = engine.cat();
  const auto& members = engine.cells(CellKind::right).classes.at(right_class);
  require_strongly_regular(engine, two_sided_of(engine, members.front()));
  std::vector<MorphId> self_dual;
  for (auto m : members) {
    if (cat.star(m) == m) {
      self_dual.push_back(m);
    }
  }
  if (self_dual.size() != 1) {
    throw CellError("right cell " + label_set(cat, members) + " has " +
                    std::to_string(self_dual.size()) + " self-dual elements, expected 1");
  }
  return self_dual.front();
}

MCoeff m_coeff(const CellEngine& engine, MorphId f, MorphId h) {
  const auto& cat = engine.cat();
  auto q = two_sided_of(engine, f);
  if (two_sided_of(engine, h) != q) {
    throw std::invalid_argument(cat.label(f) + " and " + cat.label(h) +
                                " lie in different two-sided cells");
  }
  if (cat.tgt(f) != cat.tgt(h)) {
    throw NotComposable("star(" + cat.label(h) + ")∘" + cat.label(f) + " is not defined");
  }
  require_strongly_regular(engine, q);
  auto hs = cat.star(h);
  auto predicted = meet(engine, engine.cells(CellKind::left).of(hs),
                        engine.cells(CellKind::right).of(f));
  auto composite = in_cell(engine, cat.compose(hs, f), q);
  if (composite.empty()) {
    return MCoeff{};
  }
  if (!predicted || composite.size() != 1 || composite.begin()->first != *predicted) {
    throw CellError("star(" + cat.label(h) + ")∘" + cat.label(f) + " = " +
                    format_multiset(cat, composite) + " is not a multiple of " +
                    (predicted ? cat.label(*predicted) : std::string("an element of L∩R")));
  }
  return MCoeff{predicted, composite.begin()->second};
}

MTable m_table(const CellEngine& engine, std::size_t two_sided_class) {
  require_strongly_regular(engine, two_sided_class);
  const auto& cat = engine.cat();
  MTable table;
  table.cell = two_sided_class;
  const auto& members = engine.cells(CellKind::two_sided)[two_sided_class];
  for (auto f : members) {
    for (auto h : members) {
      if (cat.tgt(f) == cat.tgt(h)) {
        table.m.emplace(std::pair{f, h}, m_coeff(engine, f, h));
      }
    }
  }
  for (auto r : engine.right_cells_in(two_sided_class)) {
    table.duflo.emplace(r, duflo_element(engine, r));
  }
  return table;
}

LeftConstancy check_left_constancy(const CellEngine& engine, std::size_t two_sided_class) {
  require_strongly_regular(engine, two_sided_class);
  LeftConstancy out;
  const auto& left = engine.cells(CellKind::left);
  for (auto l : engine.left_cells_in(two_sided_class)) {
    const auto& members = left[l];
    auto first = m_coeff(engine, members.front(), members.front()).m;
    for (auto f : members) {
      if (m_coeff(engine, f, f).m != first) {
        out.holds = false;
        out.witness_left_cell = l;
        out.witness = members;
        return out;
      }
    }
  }
  return out;
}

CartanBlock cartan_matrix(const CellEngine& engine, std::size_t right_class, ObjectId target) {
  const auto& cat = engine.cat();
  const auto& members = engine.cells(CellKind::right).classes.at(right_class);
  auto duflo = duflo_element(engine, right_class);
  CartanBlock block;
  block.right_cell = right_class;
  block.target = target;
  for (auto m : members) {
    if (cat.tgt(m) == target) {
      block.basis.push_back(m);
    }
  }
  if (block.basis.empty()) {
    throw CellError("right cell " + label_set(cat, members) + " has no element with target " +
                    cat.object_label(target));
  }
  for (auto h : block.basis) {
    std::vector<Integer> row;
    for (auto f : block.basis) {
      row.push_back(cat.compose(cat.star(h), f)[duflo]);
    }
    block.matrix.push_back(std::move(row));
  }
  return block;
}

std::vector<CartanBlock> cartan_blocks(const CellEngine& engine, std::size_t right_class) {
  const auto& cat = engine.cat();
  const auto& members = engine.cells(CellKind::right).classes.at(right_class);
  std::vector<CartanBlock> out;
  for (auto j : cat.object_ids()) {
    bool present = std::any_of(members.begin(), members.end(),
                               [&](MorphId m) { return cat.tgt(m) == j; });
    if (present) {
      out.push_back(cartan_matrix(engine, right_class, j));
    }
  }
  return out;
}

std::vector<std::vector<Integer>> canonical_block(const std::vector<std::vector<Integer>>& matrix) {
  const auto n = matrix.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Integer>> best;
  do {
    std::vector<std::vector<Integer>> candidate(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        candidate[i][j] = matrix[perm[i]][perm[j]];
      }
    }
    if (best.empty() || candidate < best) {
      best = std::move(candidate);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

BlockAgreement cartan_blocks_agree(const CellEngine& engine, std::size_t two_sided_class) {
  const auto& cat = engine.cat();
  const auto& right = engine.cells(CellKind::right);
  BlockAgreement out;
  std::optional<std::vector<std::vector<std::vector<Integer>>>> reference;
  std::size_t reference_cell = 0;
  for (auto r : engine.right_cells_in(two_sided_class)) {
    std::vector<std::vector<std::vector<Integer>>> forms;
    for (const auto& block : cartan_blocks(engine, r)) {
      forms.push_back(canonical_block(block.matrix));
    }
    std::sort(forms.begin(), forms.end());
    if (!reference) {
      reference = forms;
      reference_cell = r;
      continue;
    }
    if (forms != *reference) {
      auto describe = [](const std::vector<std::vector<std::vector<Integer>>>& fs) {
        std::string s;
        for (const auto& f : fs) {
          s += (s.empty() ? "" : " ") + format_matrix(f);
        }
        return s;
      };
      out.agree = false;
      out.detail = "right cell " + label_set(cat, right[reference_cell]) + " has blocks " +
                   describe(*reference) + " but " + label_set(cat, right[r]) + " has " +
                   describe(forms);
      return out;
    }
  }
  return out;
}

CellRestriction cell_subcategory(const CellEngine& engine, std::size_t two_sided_class) {
  require_strongly_regular(engine, two_sided_class);
  const auto& cat = engine.cat();
  const auto& q = engine.cells(CellKind::two_sided)[two_sided_class];
  std::vector<bool> in_q(cat.morph_count(), false);
  for (auto m : q) {
    in_q[m.index] = true;
  }

  CellRestriction out;
  MultiCatBuilder builder;
  for (auto o : cat.object_ids()) {
    builder.add_object(cat.object_label(o));
  }
  std::vector<std::optional<MorphId>> image(cat.morph_count());
  for (auto m : cat.morph_ids()) {
    if (cat.is_identity(m) || in_q[m.index]) {
      image[m.index] = builder.add_morph(cat.label(m), cat.src(m), cat.tgt(m), cat.is_identity(m));
      out.kept.push_back(m);
    }
  }
  for (auto m : out.kept) {
    if (cat.is_identity(m)) {
      continue;
    }
    auto s = cat.star(m);
    if (!image[s.index]) {
      throw CellError("star(" + cat.label(m) + ") = " + cat.label(s) + " leaves the cell");
    }
    builder.set_star(*image[m.index], *image[s.index]);
  }
  for (auto g : out.kept) {
    for (auto f : out.kept) {
      if (!cat.composable(g, f) || cat.is_identity(g) || cat.is_identity(f)) {
        continue;
      }
      std::vector<Multiset::Entry> entries;
      for (const auto& [k, mult] : cat.compose(g, f)) {
        if (image[k.index]) {
          entries.emplace_back(*image[k.index], mult);
          continue;
        }
        if (!engine.leq_LR(q.front(), k) || in_q[k.index]) {
          throw std::logic_error("discarded summand " + cat.label(k) + " of " + cat.label(g) +
                                 "∘" + cat.label(f) + " does not lie strictly above the cell");
        }
        out.discarded.push_back(DiscardedSummand{g, f, k, mult});
      }
      builder.set_compose(*image[g.index], *image[f.index], Multiset(std::move(entries)));
    }
  }
  out.cat = std::move(builder).build();

  CellEngine restricted(out.cat);
  const auto& classes = restricted.cells(CellKind::two_sided);
  auto first = classes.of(*image[q.front().index]);
  bool intact = classes[first].size() == q.size();
  for (auto m : q) {
    intact = intact && classes.of(*image[m.index]) == first;
  }
  if (!intact) {
    throw std::logic_error("the cell " + label_set(cat, q) +
                           " is not a single two-sided cell of its restriction");
  }
  return out;
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::not_applicable:
      return "not-applicable";
  }
  return "?";
}

const LintCheck& LintReport::check(std::string_view id) const {
  for (const auto& c : checks) {
    if (c.id == id) {
      return c;
    }
  }
  throw std::out_of_range("no lint check '" + std::string(id) + "'");
}

namespace {

struct CheckSpec {
  const char* id;
  const char* description;
};

const std::vector<CheckSpec>& cell_checks() {
  static const std::vector<CheckSpec> specs = {
      {"star-cell-compatibility", "F ~LR star(F) for every F"},
      {"order-factorization", "<=LR is the composite of <=R and <=L in either order"},
      {"annihilator-coideal", "annihilators of simples are <=R coideals"},
      {"regular-intersections", "every L∩R inside a regular cell is nonempty"},
      {"duflo-uniqueness", "each right cell of a strongly regular cell has one self-dual element"},
      {"m-purity", "star(H)∘F is m copies of the element of L_{star H}∩R_F modulo higher cells, with m_{F,F} >= 1"},
      {"m-symmetry", "m_{F,H} = m_{H,F} for F ~R H"},
      {"duflo-action-purity", "F∘H = m_{H,H}F and H∘star(F) = m_{H,H}star(F) modulo higher cells, for self-dual H ~R F"},
      {"m-product-identity",
       "m_{F,F}m_{G,G} = m_{F*,F*}m_{H,H} for self-dual H ~L F and G ~R F"},
      {"cartan-symmetry", "Cartan blocks are symmetric with positive diagonal"},
      {"m-dominance", "m_{F,F} <= m_{H,H} for self-dual H ~L F"},
      {"m-divisibility", "m_{F,F} divides m_{H,H} for self-dual H ~L F"},
      {"m-left-constancy", "m_{F,F} is constant on left cells"},
      {"cartan-block-equivalence",
       "right cells of a cell with constant m on left cells have equal Cartan blocks"},
  };
  return specs;
}

class Tally {
 public:
  explicit Tally(LintCheck& check) : check_(check) {}
  void evaluated() { evaluated_ = true; }
  void fail(std::string witness) {
    evaluated_ = true;
    check_.witnesses.push_back(std::move(witness));
  }
  void finish() {
    std::sort(check_.witnesses.begin(), check_.witnesses.end());
    check_.witnesses.erase(std::unique(check_.witnesses.begin(), check_.witnesses.end()),
                           check_.witnesses.end());
    check_.status = !check_.witnesses.empty() ? CheckStatus::fail
                    : evaluated_              ? CheckStatus::pass
                                              : CheckStatus::not_applicable;
  }

 private:
  LintCheck& check_;
  bool evaluated_ = false;
};

void lint_strong_cell(const CellEngine& engine, std::size_t q_index,
                      std::map<std::string, Tally>& tally) {
  const auto& cat = engine.cat();
  const auto& left = engine.cells(CellKind::left);
  const auto& right = engine.cells(CellKind::right);
  const auto& q = engine.cells(CellKind::two_sided)[q_index];
  const auto& L = [&](MorphId m) { return left.of(m); };
  const auto& R = [&](MorphId m) { return right.of(m); };

  std::map<std::size_t, MorphId> duflo_right;
  std::map<std::size_t, MorphId> duflo_left;
  bool duflo_ok = true;
  auto& duflo_tally = tally.at("duflo-uniqueness");
  for (auto r : engine.right_cells_in(q_index)) {
    std::vector<MorphId> self_dual;
    for (auto m : right[r]) {
      if (cat.star(m) == m) {
        self_dual.push_back(m);
      }
    }
    duflo_tally.evaluated();
    if (self_dual.size() != 1) {
      duflo_ok = false;
      duflo_tally.fail("right cell " + label_set(cat, right[r]) + " has self-dual elements " +
                       label_set(cat, self_dual));
    } else {
      duflo_right[r] = self_dual.front();
      duflo_left[L(self_dual.front())] = self_dual.front();
    }
  }
  if (!duflo_ok) {
    return;
  }

  std::map<std::pair<MorphId, MorphId>, Integer> m;
  bool pure = true;
  auto& purity = tally.at("m-purity");
  for (auto f : q) {
    for (auto h : q) {
      if (cat.tgt(f) != cat.tgt(h)) {
        continue;
      }
      purity.evaluated();
      auto composite = in_cell(engine, cat.compose(cat.star(h), f), q_index);
      auto predicted = meet(engine, L(cat.star(h)), R(f));
      if (composite.empty()) {
        m[{f, h}] = 0;
      } else if (!predicted || composite.size() != 1 || composite.begin()->first != *predicted) {
        pure = false;
        purity.fail("star(" + cat.label(h) + ")∘" + cat.label(f) + " = " +
                    format_multiset(cat, composite));
      } else {
        m[{f, h}] = composite.begin()->second;
      }
    }
  }
  if (!pure) {
    return;
  }
  for (auto f : q) {
    if (m.at({f, f}) == 0) {
      purity.fail("m_{" + cat.label(f) + "," + cat.label(f) + "} = 0");
      return;
    }
  }
  auto mm = [&](MorphId f) { return m.at({f, f}); };

  auto& symmetry = tally.at("m-symmetry");
  for (auto f : q) {
    for (auto h : q) {
      if (R(f) == R(h) && cat.tgt(f) == cat.tgt(h)) {
        symmetry.evaluated();
        if (m.at({f, h}) != m.at({h, f})) {
          symmetry.fail("m_{" + cat.label(f) + "," + cat.label(h) + "} = " +
                        m.at({f, h}).get_str() + " but m_{" + cat.label(h) + "," +
                        cat.label(f) + "} = " + m.at({h, f}).get_str());
        }
      }
    }
  }

  auto& action = tally.at("duflo-action-purity");
  for (auto f : q) {
    auto h = duflo_right.at(R(f));
    action.evaluated();
    auto expected = Multiset::single(f, mm(h));
    auto got = in_cell(engine, cat.compose(f, h), q_index);
    if (got != expected) {
      action.fail(cat.label(f) + "∘" + cat.label(h) + " = " + format_multiset(cat, got) +
                  ", expected " + format_multiset(cat, expected));
    }
    auto fs = cat.star(f);
    auto expected_star = Multiset::single(fs, mm(h));
    auto got_star = in_cell(engine, cat.compose(h, fs), q_index);
    if (got_star != expected_star) {
      action.fail(cat.label(h) + "∘" + cat.label(fs) + " = " + format_multiset(cat, got_star) +
                  ", expected " + format_multiset(cat, expected_star));
    }
  }

  auto& product = tally.at("m-product-identity");
  auto& dominance = tally.at("m-dominance");
  auto& divisibility = tally.at("m-divisibility");
  for (auto f : q) {
    auto g = duflo_right.at(R(f));
    auto it = duflo_left.find(L(f));
    if (it == duflo_left.end()) {
      continue;
    }
    auto h = it->second;
    product.evaluated();
    if (mm(f) * mm(g) != mm(cat.star(f)) * mm(h)) {
      product.fail("F = " + cat.label(f) + ": m_{F,F}m_{G,G} = " + mm(f).get_str() + "·" +
                   mm(g).get_str() + " but m_{F*,F*}m_{H,H} = " + mm(cat.star(f)).get_str() +
                   "·" + mm(h).get_str() + " (G = " + cat.label(g) + ", H = " + cat.label(h) +
                   ")");
    }
    dominance.evaluated();
    if (mm(f) > mm(h)) {
      dominance.fail("m_{" + cat.label(f) + "," + cat.label(f) + "} = " + mm(f).get_str() +
                     " > m_{" + cat.label(h) + "," + cat.label(h) + "} = " + mm(h).get_str());
    }
    divisibility.evaluated();
    if (mm(h) % mm(f) != 0) {
      divisibility.fail("m_{" + cat.label(f) + "," + cat.label(f) + "} = " + mm(f).get_str() +
                        " does not divide m_{" + cat.label(h) + "," + cat.label(h) +
                        "} = " + mm(h).get_str());
    }
  }

  auto& cartan = tally.at("cartan-symmetry");
  for (auto r : engine.right_cells_in(q_index)) {
    for (const auto& block : cartan_blocks(engine, r)) {
      cartan.evaluated();
      const auto n = block.basis.size();
      for (std::size_t i = 0; i < n; ++i) {
        if (block.matrix[i][i] < 1) {
          cartan.fail("diagonal entry at " + cat.label(block.basis[i]) + " is " +
                      block.matrix[i][i].get_str());
        }
        for (std::size_t j = i + 1; j < n; ++j) {
          if (block.matrix[i][j] != block.matrix[j][i]) {
            cartan.fail("entries at (" + cat.label(block.basis[i]) + ", " +
                        cat.label(block.basis[j]) + ") differ: " + block.matrix[i][j].get_str() +
                        " vs " + block.matrix[j][i].get_str());
          }
        }
      }
    }
  }

  auto& constancy = tally.at("m-left-constancy");
  bool constant = true;
  for (auto l : engine.left_cells_in(q_index)) {
    constancy.evaluated();
    for (auto f : left[l]) {
      if (mm(f) != mm(left[l].front())) {
        constant = false;
        std::string values;
        for (auto x : left[l]) {
          values += (values.empty() ? "" : ", ") + cat.label(x) + ":" + mm(x).get_str();
        }
        constancy.fail("left cell " + label_set(cat, left[l]) + " has m_{F,F} values " + values);
        break;
      }
    }
  }
  if (constant) {
    auto& equivalence = tally.at("cartan-block-equivalence");
    equivalence.evaluated();
    auto agreement = cartan_blocks_agree(engine, q_index);
    if (!agreement.agree) {
      equivalence.fail(agreement.detail);
    }
  }
}

}  // namespace

const std::vector<std::string>& lint_check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out = validation_laws();
    for (const auto& spec : cell_checks()) {
      out.emplace_back(spec.id);
    }
    return out;
  }();
  return ids;
}

LintReport fiat_lint(const MultiCat& cat) {
  LintReport report;
  auto validation = validate(cat);
  for (const auto& law : validation_laws()) {
    LintCheck check{law, "table law: " + law, CheckStatus::pass, {}};
    for (const auto& v : validation.violations) {
      if (v.law == law) {
        check.witnesses.push_back(v.detail);
      }
    }
    if (!check.witnesses.empty()) {
      check.status = CheckStatus::fail;
    }
    report.checks.push_back(std::move(check));
  }
  const auto first_cell_check = report.checks.size();
  for (const auto& spec : cell_checks()) {
    report.checks.push_back(LintCheck{spec.id, spec.description, CheckStatus::not_applicable, {}});
  }

  if (validation.ok()) {
    CellEngine engine(cat);
    std::map<std::string, Tally> tally;
    for (std::size_t i = first_cell_check; i < report.checks.size(); ++i) {
      tally.emplace(report.checks[i].id, Tally(report.checks[i]));
    }

    auto& star_cells = tally.at("star-cell-compatibility");
    for (auto f : cat.morph_ids()) {
      star_cells.evaluated();
      if (!engine.equivalent(CellKind::two_sided, f, cat.star(f))) {
        star_cells.fail(cat.label(f) + " and star(" + cat.label(f) + ") = " +
                        cat.label(cat.star(f)) + " lie in different two-sided cells");
      }
    }

    auto& factorization = tally.at("order-factorization");
    auto fact = engine.verify_order_factorization();
    factorization.evaluated();
    if (!fact.holds) {
      factorization.fail(fact.detail);
    }

    auto& coideal = tally.at("annihilator-coideal");
    for (auto g : cat.morph_ids()) {
      coideal.evaluated();
      try {
        engine.annihilator_of_simple(g);
      } catch (const std::logic_error& e) {
        coideal.fail(e.what());
      }
    }

    auto& intersections = tally.at("regular-intersections");
    const auto& two_sided = engine.cells(CellKind::two_sided);
    for (std::size_t q = 0; q < two_sided.size(); ++q) {
      auto verdict = engine.classify_two_sided(q);
      if (!verdict.regular) {
        continue;
      }
      intersections.evaluated();
      for (auto [l, r] : verdict.empty_intersections) {
        intersections.fail("left cell " + label_set(cat, engine.cells(CellKind::left)[l]) +
                           " and right cell " + label_set(cat, engine.cells(CellKind::right)[r]) +
                           " do not meet");
      }
      if (verdict.strongly_regular) {
        lint_strong_cell(engine, q, tally);
      }
    }
    for (auto& [id, t] : tally) {
      t.finish();
    }
  }

  report.fiat_certified_impossible =
      std::any_of(report.checks.begin(), report.checks.end(),
                  [](const LintCheck& c) { return c.status == CheckStatus::fail; });
  return report;
}

}  // namespace fiatcells
