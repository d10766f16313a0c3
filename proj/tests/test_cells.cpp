#include <gtest/gtest.h>

#include "fiatcells/cells.hpp"
#include "fiatcells/constructors.hpp"
#include "support/test_util.hpp"

using namespace fiatcells;
using testutil::id;

namespace {

std::vector<std::vector<std::string>> labelled(const MultiCat& cat, const CellPartition& p) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : p.classes) {
    out.emplace_back();
    for (auto m : c) {
      out.back().push_back(cat.label(m));
    }
  }
  return out;
}

// Representation ring of S_3: 1, sgn, V with V⊗V = 1 + sgn + V.
MultiCat rep_ring_s3() {
  MultiCatBuilder b;
  auto o = b.add_object("o");
  auto one = b.add_morph("1", o, o, true);
  auto sgn = b.add_morph("sgn", o, o);
  auto v = b.add_morph("V", o, o);
  for (auto m : {sgn, v}) {
    b.set_star(m, m);
  }
  b.set_compose(sgn, sgn, Multiset::single(one));
  b.set_compose(sgn, v, Multiset::single(v));
  b.set_compose(v, sgn, Multiset::single(v));
  b.set_compose(v, v, Multiset({{one, 1}, {sgn, 1}, {v, 1}}));
  return std::move(b).build();
}

}  // namespace

TEST(Cells, S2RightCells) {
  auto s2 = make_s2();
  CellEngine engine(s2);
  const auto& right = engine.cells(CellKind::right);
  EXPECT_EQ(labelled(s2, right), (std::vector<std::vector<std::string>>{{"1"}, {"F"}}));
  EXPECT_TRUE(engine.leq_R(id(s2, "1"), id(s2, "F")));
  EXPECT_FALSE(engine.leq_R(id(s2, "F"), id(s2, "1")));
  ASSERT_EQ(right.hasse.size(), 1u);
  EXPECT_EQ(right.hasse[0], (std::pair<std::size_t, std::size_t>{0, 1}));
}

TEST(Cells, Sl2Partitions) {
  auto sl2 = make_sl2_singular();
  CellEngine engine(sl2);
  using L = std::vector<std::vector<std::string>>;
  EXPECT_EQ(labelled(sl2, engine.cells(CellKind::right)),
            (L{{"1_i"}, {"1_j", "theta_out"}, {"theta_on", "theta"}}));
  EXPECT_EQ(labelled(sl2, engine.cells(CellKind::left)),
            (L{{"1_i"}, {"1_j", "theta_on"}, {"theta_out", "theta"}}));
  EXPECT_EQ(labelled(sl2, engine.cells(CellKind::two_sided)),
            (L{{"1_i"}, {"1_j", "theta_on", "theta_out", "theta"}}));
  EXPECT_EQ(engine.cells(CellKind::two_sided).hasse,
            (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}));
}

TEST(Cells, PreordersAreReflexive) {
  auto sl2 = make_sl2_singular();
  CellEngine engine(sl2);
  for (auto m : sl2.morph_ids()) {
    for (auto kind : {CellKind::left, CellKind::right, CellKind::two_sided}) {
      EXPECT_TRUE(engine.leq(kind, m, m));
    }
  }
}

TEST(Cells, HeckeS3CellCounts) {
  auto h = make_hecke(3);
  CellEngine engine(h);
  EXPECT_EQ(engine.cells(CellKind::right).size(), 4u);
  EXPECT_EQ(engine.cells(CellKind::left).size(), 4u);
  EXPECT_EQ(engine.cells(CellKind::two_sided).size(), 3u);
  for (std::size_t q = 0; q < 3; ++q) {
    EXPECT_TRUE(engine.classify_two_sided(q).strongly_regular);
  }
}

TEST(Cells, OrderFactorization) {
  for (const auto& cat : {make_s2(), make_sl2_singular(), make_hecke(3), rep_ring_s3()}) {
    CellEngine engine(cat);
    EXPECT_TRUE(engine.verify_order_factorization().holds);
  }
}

TEST(Cells, RegularButNotStronglyRegular) {
  auto ring = rep_ring_s3();
  ASSERT_TRUE(validate(ring).ok());
  CellEngine engine(ring);
  ASSERT_EQ(engine.cells(CellKind::two_sided).size(), 1u);
  auto verdict = engine.classify_two_sided(0);
  EXPECT_TRUE(verdict.regular);
  EXPECT_FALSE(verdict.strongly_regular);
  EXPECT_FALSE(verdict.witnesses.empty());
  EXPECT_TRUE(verdict.empty_intersections.empty());
}

TEST(Cells, ClassifyRejectsBadIndex) {
  auto s2 = make_s2();
  CellEngine engine(s2);
  EXPECT_THROW(engine.classify_two_sided(2), std::out_of_range);
}

TEST(Cells, CellsInsideTwoSided) {
  auto sl2 = make_sl2_singular();
  CellEngine engine(sl2);
  EXPECT_EQ(engine.right_cells_in(1), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(engine.left_cells_in(1), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(engine.right_cells_in(0), (std::vector<std::size_t>{0}));
}

TEST(Cells, ActsNonzeroNeedsComposable) {
  auto sl2 = make_sl2_singular();
  CellEngine engine(sl2);
  EXPECT_THROW(engine.acts_nonzero(id(sl2, "theta_on"), id(sl2, "1_j")), NotComposable);
  EXPECT_TRUE(engine.acts_nonzero(id(sl2, "theta_out"), id(sl2, "1_j")));
  EXPECT_FALSE(engine.acts_nonzero(id(sl2, "theta_on"), id(sl2, "1_i")));
}

TEST(Cells, Sl2Annihilators) {
  auto sl2 = make_sl2_singular();
  CellEngine engine(sl2);
  EXPECT_TRUE(engine.annihilator_of_simple(id(sl2, "1_j")).empty());
  auto ann = engine.annihilator_of_simple(id(sl2, "1_i"));
  std::vector<std::string> labels;
  for (auto m : ann) {
    labels.push_back(sl2.label(m));
  }
  EXPECT_EQ(labels, (std::vector<std::string>{"theta_on", "theta"}));
}

TEST(Cells, CompositionMultiplicityInPrincipalRepresentation) {
  auto sl2 = make_sl2_singular();
  CellEngine engine(sl2);
  // star(theta_out)∘theta = theta_on∘theta_out∘theta_on = 2 theta_on.
  EXPECT_EQ(engine.comp_mult_principal(id(sl2, "theta_out"), id(sl2, "theta_on"),
                                       id(sl2, "theta")),
            2);
  EXPECT_EQ(engine.comp_mult_principal(id(sl2, "1_i"), id(sl2, "1_i"), id(sl2, "1_i")), 1);
}

TEST(Cells, KindNames) {
  EXPECT_EQ(parse_cell_kind("two-sided"), CellKind::two_sided);
  EXPECT_EQ(to_string(CellKind::left), "left");
  EXPECT_THROW(parse_cell_kind("middle"), std::invalid_argument);
}
