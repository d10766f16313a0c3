#include <gtest/gtest.h>

#include "fiatcells/bimodule.hpp"
#include "fiatcells/constructors.hpp"
#include "support/test_util.hpp"

using namespace fiatcells;

namespace {

AlgebraPtr shared(Algebra a) { return std::make_shared<const Algebra>(std::move(a)); }

const char* path_algebra_a2 = R"({
  "name": "A2",
  "basis": ["e1", "e2", "a"],
  "products": [
    ["e1", "e1", {"e1": 1}], ["e2", "e2", {"e2": 1}],
    ["e1", "a", {"a": 1}], ["a", "e2", {"a": 1}]
  ],
  "unit": {"e1": 1, "e2": 1},
  "idempotents": [{"e1": 1}, {"e2": 1}]
})";

}  // namespace

TEST(Algebra, DualNumbers) {
  auto d = dual_numbers();
  EXPECT_NO_THROW(d.check());
  EXPECT_EQ(d.multiply({0, 1}, {0, 1}), (Vector{0, 0}));
  EXPECT_EQ(d.cartan_matrix(), (std::vector<std::vector<Integer>>{{2}}));
  EXPECT_EQ(field_algebra().cartan_matrix(), (std::vector<std::vector<Integer>>{{1}}));
}

TEST(Algebra, RejectsBrokenStructure) {
  auto d = dual_numbers();
  d.products[1][1] = {1, 0};  // ℚ[x]/(x² - 1)
  EXPECT_NO_THROW(d.check());
  auto bad = dual_numbers();
  bad.unit = {0, 1};
  EXPECT_THROW(bad.check(), BimoduleError);
  auto idem = dual_numbers();
  idem.idempotents = {{0, 1}};
  EXPECT_THROW(idem.check(), BimoduleError);
  // x·1 = 1 breaks the unit law and associativity.
  auto na = dual_numbers();
  na.products[1][0] = {1, 0};
  EXPECT_THROW(na.check(), BimoduleError);
}

TEST(Algebra, ParsePreprojective) {
  auto list = parse_algebra_list(testutil::fixture_text("algebras_preprojective_a2.json"));
  ASSERT_EQ(list.size(), 1u);
  EXPECT_EQ(list[0].dim(), 6u);
  EXPECT_EQ(list[0].cartan_matrix(), (std::vector<std::vector<Integer>>{{2, 1}, {1, 2}}));
  auto path = parse_algebra(path_algebra_a2);
  EXPECT_EQ(path.cartan_matrix(), (std::vector<std::vector<Integer>>{{1, 1}, {0, 1}}));
  EXPECT_THROW(parse_algebra(R"({"basis": ["1"], "unit": {"y": 1}})"), BimoduleError);
}

TEST(Bimodule, RegularAndProjective) {
  auto d = shared(dual_numbers());
  auto reg = regular_bimodule(d);
  EXPECT_NO_THROW(reg.check());
  EXPECT_EQ(reg.dim, 2u);
  auto f = projective_bimodule(d, 0, d, 0);
  EXPECT_NO_THROW(f.check());
  EXPECT_EQ(f.dim, 4u);
  auto pre = shared(parse_algebra_list(testutil::fixture_text("algebras_preprojective_a2.json"))[0]);
  auto p = projective_bimodule(pre, 0, pre, 1);
  EXPECT_NO_THROW(p.check());
  EXPECT_EQ(p.dim, 9u);
}

TEST(Bimodule, TensorWithRegularIsIdentity) {
  auto d = shared(dual_numbers());
  auto reg = regular_bimodule(d);
  auto f = projective_bimodule(d, 0, d, 0);
  auto t = tensor_over(reg, f);
  EXPECT_EQ(t.dim, 4u);
  EXPECT_NO_THROW(t.check());
  EXPECT_EQ(decompose_against(t, {f, reg}), (std::vector<Integer>{1, 0}));
  EXPECT_EQ(tensor_over(reg, reg).dim, 2u);
}

TEST(Bimodule, SquareOfProjective) {
  auto d = shared(dual_numbers());
  auto reg = regular_bimodule(d);
  auto f = projective_bimodule(d, 0, d, 0);
  auto ff = tensor_over(f, f);
  EXPECT_EQ(ff.dim, 8u);
  EXPECT_NO_THROW(ff.check());
  EXPECT_EQ(hom_space(f, ff).size(), 8u);
  EXPECT_EQ(hom_space(reg, ff).size(), 4u);
  EXPECT_EQ(decompose_against(ff, {f, reg}), (std::vector<Integer>{2, 0}));
}

TEST(Bimodule, TensorCap) {
  auto d = shared(dual_numbers());
  auto f = projective_bimodule(d, 0, d, 0);
  EXPECT_THROW(tensor_over(f, f, 15), DimensionCapExceeded);
  EXPECT_NO_THROW(tensor_over(f, f, 16));
}

TEST(Bimodule, MismatchedAlgebras) {
  auto d = shared(dual_numbers());
  auto q = shared(field_algebra());
  EXPECT_THROW(tensor_over(regular_bimodule(d), regular_bimodule(q)), BimoduleError);
  EXPECT_THROW(hom_space(regular_bimodule(d), regular_bimodule(q)), BimoduleError);
}

TEST(Bimodule, LocalityAndDecomposition) {
  auto d = shared(dual_numbers());
  auto reg = regular_bimodule(d);
  auto f = projective_bimodule(d, 0, d, 0);
  auto sum = direct_sum(f, reg);
  EXPECT_TRUE(has_local_endomorphisms(f));
  EXPECT_TRUE(has_local_endomorphisms(reg));
  EXPECT_FALSE(has_local_endomorphisms(sum));
  EXPECT_EQ(decompose_against(sum, {f, reg}), (std::vector<Integer>{1, 1}));
  EXPECT_THROW(decompose_against(sum, {f, f}), DecompositionError);
  EXPECT_THROW(decompose_against(reg, {f}), DecompositionError);
  EXPECT_THROW(decompose_against(f, {sum}), DecompositionError);
}

TEST(Bimodule, HomMapsAreBimoduleMaps) {
  auto d = shared(dual_numbers());
  auto f = projective_bimodule(d, 0, d, 0);
  auto reg = regular_bimodule(d);
  for (const auto& m : hom_space(f, reg)) {
    EXPECT_TRUE(is_bimodule_map(f, reg, m));
  }
  EXPECT_FALSE(is_bimodule_map(reg, reg, Matrix{{0, 1}, {0, 0}}));
}

TEST(Bimodule, ParseKinds) {
  auto d = R"({"name": "D", "basis": ["1", "x"],
               "products": [["1", "1", {"1": 1}], ["1", "x", {"x": 1}], ["x", "1", {"x": 1}]],
               "unit": {"1": 1}, "idempotents": [{"1": 1}]})";
  auto reg = parse_bimodule(std::string(R"({"kind": "regular", "algebra": )") + d + "}");
  EXPECT_EQ(reg.dim, 2u);
  auto proj = parse_bimodule(std::string(R"({"kind": "projective", "left": )") + d +
                             R"(, "right": )" + d + "}");
  EXPECT_EQ(proj.dim, 4u);
  auto sum = parse_bimodule(std::string(R"({"kind": "sum", "name": "S", "parts": [)") +
                            R"({"kind": "regular", "algebra": )" + d + "}, " +
                            R"({"kind": "regular", "algebra": )" + d + "}]}");
  EXPECT_EQ(sum.dim, 4u);
  EXPECT_EQ(sum.name, "S");
  auto explicit_reg = parse_bimodule(
      std::string(R"({"kind": "explicit", "dim": 2, "left": )") + d + R"(, "right": )" + d +
      R"(, "left_action": {"1": [[1, 0], [0, 1]], "x": [[0, 0], [1, 0]]},
          "right_action": {"1": [[1, 0], [0, 1]], "x": [[0, 0], [1, 0]]}})");
  EXPECT_EQ(hom_space(explicit_reg, reg).size(), 2u);
  EXPECT_THROW(parse_bimodule(std::string(R"({"kind": "explicit", "dim": 2, "left": )") + d +
                              R"(, "right": )" + d +
                              R"(, "left_action": {"1": [[1, 0], [0, 1]], "x": [[0, 1], [1, 0]]},
                                  "right_action": {"1": [[1, 0], [0, 1]], "x": [[0, 0], [1, 0]]}})"),
               BimoduleError);
  EXPECT_THROW(parse_bimodule(R"({"kind": "weird"})"), BimoduleError);
}

TEST(Quiver, DualNumberRelations) {
  auto report = verify_dual_numbers_quiver();
  EXPECT_TRUE(report.all_hold());
  EXPECT_EQ(report.checks.size(), 8u);
  for (const auto& c : report.checks) {
    EXPECT_TRUE(c.holds) << c.name << ": " << c.detail;
  }
  EXPECT_EQ(report.end_f, 4u);
  EXPECT_EQ(report.hom_f_1, 2u);
  EXPECT_EQ(report.hom_1_f, 2u);
  EXPECT_EQ(report.end_1, 2u);
}

class RealizeCA : public ::testing::TestWithParam<std::pair<const char*, const char*>> {};

TEST_P(RealizeCA, MatchesFormulaTable) {
  auto [algebras, cartan] = GetParam();
  auto realized = realize_CA(parse_algebra_list(testutil::fixture_text(algebras)));
  auto data = parse_cartan_data(cartan);
  EXPECT_EQ(realized.cartan, data);
  auto formula = make_CA(data);
  EXPECT_EQ(realized.cat, formula);
  EXPECT_EQ(realized.bimodules.size(), formula.morph_count());
}

INSTANTIATE_TEST_SUITE_P(
    Fixtures, RealizeCA,
    ::testing::Values(std::pair{"algebras_q_d.json", "[[[1]], [[2]]]"},
                      std::pair{"algebras_d.json", "[[[2]]]"},
                      std::pair{"algebras_preprojective_a2.json", "[[[2, 1], [1, 2]]]"}));

TEST(RealizeCAErrors, RejectsAsymmetricCartan) {
  EXPECT_THROW(realize_CA({parse_algebra(path_algebra_a2)}), BimoduleError);
}

TEST(RealizeCAErrors, CapApplies) {
  EXPECT_THROW(realize_CA({dual_numbers()}, 8), DimensionCapExceeded);
}
