#include <gtest/gtest.h>

#include "fiatcells/constructors.hpp"
#include "fiatcells/strong_cells.hpp"
#include "support/test_util.hpp"

using namespace fiatcells;
using testutil::id;

TEST(Duflo, Sl2RightCells) {
  auto sl2 = make_sl2_singular();
  CellEngine engine(sl2);
  EXPECT_EQ(sl2.label(duflo_element(engine, 0)), "1_i");
  EXPECT_EQ(sl2.label(duflo_element(engine, 1)), "1_j");
  EXPECT_EQ(sl2.label(duflo_element(engine, 2)), "theta");
}

TEST(MCoefficient, Sl2Values) {
  auto sl2 = make_sl2_singular();
  CellEngine engine(sl2);
  auto on = id(sl2, "theta_on");
  auto out = id(sl2, "theta_out");
  auto theta = id(sl2, "theta");
  auto c = m_coeff(engine, out, out);
  EXPECT_EQ(c.m, 2);
  EXPECT_EQ(c.target, id(sl2, "1_j"));
  EXPECT_EQ(m_coeff(engine, on, on).m, 1);
  EXPECT_EQ(m_coeff(engine, on, on).target, theta);
  EXPECT_EQ(m_coeff(engine, theta, out).target, on);
}

TEST(MCoefficient, Errors) {
  auto sl2 = make_sl2_singular();
  CellEngine engine(sl2);
  EXPECT_THROW(m_coeff(engine, id(sl2, "1_i"), id(sl2, "theta")), std::invalid_argument);
  EXPECT_THROW(m_coeff(engine, id(sl2, "theta_on"), id(sl2, "theta")), NotComposable);
}

TEST(MCoefficient, RequiresStrongRegularity) {
  MultiCatBuilder b;
  auto o = b.add_object("o");
  auto one = b.add_morph("1", o, o, true);
  auto sgn = b.add_morph("sgn", o, o);
  auto v = b.add_morph("V", o, o);
  b.set_star(sgn, sgn);
  b.set_star(v, v);
  b.set_compose(sgn, sgn, Multiset::single(one));
  b.set_compose(sgn, v, Multiset::single(v));
  b.set_compose(v, sgn, Multiset::single(v));
  b.set_compose(v, v, Multiset({{one, 1}, {sgn, 1}, {v, 1}}));
  auto ring = std::move(b).build();
  CellEngine engine(ring);
  EXPECT_THROW(m_coeff(engine, v, v), CellError);
  EXPECT_THROW(duflo_element(engine, 0), CellError);
}

TEST(MTable, Sl2Diagonal) {
  auto sl2 = make_sl2_singular();
  CellEngine engine(sl2);
  auto table = m_table(engine, 1);
  EXPECT_EQ(table.diagonal(id(sl2, "1_j")), 1);
  EXPECT_EQ(table.diagonal(id(sl2, "theta_on")), 1);
  EXPECT_EQ(table.diagonal(id(sl2, "theta_out")), 2);
  EXPECT_EQ(table.diagonal(id(sl2, "theta")), 2);
  EXPECT_EQ(table.m.size(), 8u);
  EXPECT_EQ(table.duflo.size(), 2u);
}

TEST(LeftConstancy, HoldsOnSl2AndFailsOnFixture) {
  auto sl2 = make_sl2_singular();
  CellEngine engine(sl2);
  EXPECT_TRUE(check_left_constancy(engine, 1).holds);

  auto bad = testutil::fixture("unequal_m.json");
  CellEngine bad_engine(bad);
  const auto q = bad_engine.cells(CellKind::two_sided).of(id(bad, "X11"));
  auto result = check_left_constancy(bad_engine, q);
  EXPECT_FALSE(result.holds);
  EXPECT_TRUE(result.witness_left_cell.has_value());
}

TEST(Cartan, Sl2Blocks) {
  auto sl2 = make_sl2_singular();
  CellEngine engine(sl2);
  auto blocks = cartan_blocks(engine, 1);
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(sl2.object_label(blocks[0].target), "i");
  EXPECT_EQ(blocks[0].matrix, (std::vector<std::vector<Integer>>{{2}}));
  EXPECT_EQ(blocks[1].matrix, (std::vector<std::vector<Integer>>{{1}}));
  EXPECT_TRUE(cartan_blocks_agree(engine, 1).agree);
  EXPECT_THROW(cartan_matrix(engine, 0, *sl2.find_object("j")), CellError);
}

TEST(Cartan, BlockDiagonalEqualsM) {
  auto ca = make_CA(parse_cartan_data(R"([[[2, 1], [1, 2]]])"));
  CellEngine engine(ca);
  for (std::size_t r = 0; r < engine.cells(CellKind::right).size(); ++r) {
    for (const auto& block : cartan_blocks(engine, r)) {
      for (std::size_t i = 0; i < block.basis.size(); ++i) {
        auto f = block.basis[i];
        EXPECT_EQ(block.matrix[i][i], m_coeff(engine, f, f).m);
      }
    }
  }
}

TEST(Cartan, CanonicalFormIgnoresBasisOrder) {
  std::vector<std::vector<Integer>> a{{2, 1}, {1, 1}};
  std::vector<std::vector<Integer>> b{{1, 1}, {1, 2}};
  EXPECT_EQ(canonical_block(a), canonical_block(b));
  EXPECT_EQ(canonical_block(b), b);
  std::vector<std::vector<Integer>> c{{1, 2}, {2, 1}};
  EXPECT_NE(canonical_block(a), canonical_block(c));
}

TEST(Restriction, Sl2BigCell) {
  auto sl2 = make_sl2_singular();
  CellEngine engine(sl2);
  auto r = cell_subcategory(engine, 1);
  EXPECT_EQ(r.cat.morph_count(), 5u);
  EXPECT_TRUE(r.discarded.empty());
  EXPECT_TRUE(validate(r.cat).ok());
}

TEST(Restriction, S2TopCell) {
  auto s2 = make_s2();
  CellEngine engine(s2);
  auto r = cell_subcategory(engine, 1);
  ASSERT_EQ(r.cat.morph_count(), 2u);
  auto f = r.cat.morph_by_label("F");
  EXPECT_EQ(r.cat.compose(f, f), Multiset::single(f, 2));
}

TEST(Restriction, HeckeS3MiddleCell) {
  auto h = make_hecke(3);
  CellEngine engine(h);
  const auto q = engine.cells(CellKind::two_sided).of(id(h, "theta_213"));
  auto r = cell_subcategory(engine, q);
  EXPECT_EQ(r.cat.morph_count(), 5u);
  EXPECT_TRUE(validate(r.cat).ok());
  // b_ts b_st = (v + v^-1)(b_w0 + b_t); w0 lies above the middle cell and is dropped.
  auto ts = r.cat.morph_by_label("theta_312");
  auto st = r.cat.morph_by_label("theta_231");
  EXPECT_EQ(r.cat.compose(ts, st), Multiset::single(r.cat.morph_by_label("theta_132"), 2));
  EXPECT_EQ(h.compose(id(h, "theta_312"), id(h, "theta_231")),
            Multiset({{id(h, "theta_132"), 2}, {id(h, "theta_321"), 2}}));
  bool dropped_w0 = false;
  for (const auto& d : r.discarded) {
    dropped_w0 |= h.label(d.summand) == "theta_321";
  }
  EXPECT_TRUE(dropped_w0);
}

TEST(MTable, HeckeS3) {
  auto h = make_hecke(3);
  CellEngine engine(h);
  const auto& two = engine.cells(CellKind::two_sided);
  const auto middle = two.of(id(h, "theta_213"));
  auto table = m_table(engine, middle);
  for (auto f : two[middle]) {
    EXPECT_EQ(table.diagonal(f), 2) << h.label(f);
  }
  auto w0 = id(h, "theta_321");
  EXPECT_EQ(m_coeff(engine, w0, w0).m, 6);
  // The same coefficients come out of the restricted table.
  auto r = cell_subcategory(engine, middle);
  CellEngine restricted(r.cat);
  for (auto f : two[middle]) {
    auto g = r.cat.morph_by_label(h.label(f));
    EXPECT_EQ(m_coeff(restricted, g, g).m, table.diagonal(f));
  }
}

TEST(Lint, CheckIdsStartWithTableLaws) {
  const auto& ids = lint_check_ids();
  const auto& laws = validation_laws();
  ASSERT_GT(ids.size(), laws.size());
  for (std::size_t i = 0; i < laws.size(); ++i) {
    EXPECT_EQ(ids[i], laws[i]);
  }
  EXPECT_EQ(ids.back(), "cartan-block-equivalence");
}

TEST(Lint, PassesOnBuiltins) {
  for (const auto& cat : {make_s2(), make_sl2_singular(), make_hecke(3),
                          make_CA(parse_cartan_data(R"([[[2, 1], [1, 2]]])"))}) {
    auto report = fiat_lint(cat);
    EXPECT_TRUE(report.all_pass());
    for (const auto& c : report.checks) {
      EXPECT_NE(c.status, CheckStatus::fail) << c.id;
    }
  }
}

TEST(Lint, UnequalMFixture) {
  auto report = fiat_lint(testutil::fixture("unequal_m.json"));
  EXPECT_TRUE(report.fiat_certified_impossible);
  EXPECT_EQ(report.check("m-dominance").status, CheckStatus::fail);
  EXPECT_EQ(report.check("m-divisibility").status, CheckStatus::fail);
  EXPECT_EQ(report.check("m-left-constancy").status, CheckStatus::fail);
  EXPECT_EQ(report.check("m-symmetry").status, CheckStatus::pass);
  EXPECT_EQ(report.check("m-product-identity").status, CheckStatus::pass);
  EXPECT_EQ(report.check("associativity").status, CheckStatus::pass);
}

TEST(Lint, InvalidTableSkipsCellChecks) {
  auto report = fiat_lint(testutil::fixture("nonassociative.json"));
  EXPECT_EQ(report.check("associativity").status, CheckStatus::fail);
  EXPECT_EQ(report.check("m-symmetry").status, CheckStatus::not_applicable);
  EXPECT_TRUE(report.fiat_certified_impossible);
  EXPECT_THROW(report.check("no-such-check"), std::out_of_range);
}

TEST(Lint, WitnessesAreSorted) {
  auto report = fiat_lint(testutil::fixture("unequal_m.json"));
  for (const auto& c : report.checks) {
    EXPECT_TRUE(std::is_sorted(c.witnesses.begin(), c.witnesses.end())) << c.id;
  }
}
