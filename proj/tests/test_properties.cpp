// Identities that hold in every fiat table, checked by brute force over all
// shipped and generated tables. Preorders are recomputed here from the
// composition table rather than taken from the engine.

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "fiatcells/bimodule.hpp"
#include "fiatcells/constructors.hpp"
#include "fiatcells/interchange.hpp"
#include "fiatcells/isomorphism.hpp"
#include "fiatcells/strong_cells.hpp"
#include "support/identities.hpp"
#include "support/test_util.hpp"

using namespace fiatcells;

namespace {

constexpr std::uint64_t property_seed = 20240611;
constexpr std::size_t random_tables = 40;

// Tables are built on first use so that a process running a single test
// does not pay for the bimodule realizations.
struct Entry {
  std::string name;
  std::function<MultiCat()> build;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = [] {
    std::vector<Entry> out{
        {"s2", make_s2},
        {"sl2", make_sl2_singular},
        {"hecke3", [] { return make_hecke(3); }},
        {"hecke4", [] { return make_hecke(4); }},
        {"ca_2112", [] { return make_CA(parse_cartan_data("[[[2, 1], [1, 2]]]")); }},
        {"bimod_q_d",
         [] {
           return realize_CA(parse_algebra_list(testutil::fixture_text("algebras_q_d.json"))).cat;
         }},
        {"bimod_preprojective", [] {
           return realize_CA(parse_algebra_list(
                                 testutil::fixture_text("algebras_preprojective_a2.json")))
               .cat;
         }}};
    std::mt19937_64 rng(property_seed);
    for (std::size_t i = 0; i < random_tables; ++i) {
      auto data = random_cartan_data(rng);
      out.push_back({"random_ca_" + std::to_string(i), [data] { return make_CA(data); }});
    }
    return out;
  }();
  return all;
}

const MultiCat& table(std::size_t index) {
  static std::map<std::size_t, MultiCat> cache;
  auto it = cache.find(index);
  if (it == cache.end()) {
    it = cache.emplace(index, entries().at(index).build()).first;
  }
  return it->second;
}

using oracle::brute_orders;

class Property : public ::testing::TestWithParam<std::size_t> {
 protected:
  const MultiCat& cat() const { return table(GetParam()); }
};

std::string fixture_name(const ::testing::TestParamInfo<std::size_t>& info) {
  return entries().at(info.param).name;
}

}  // namespace

TEST_P(Property, TableIsValid) { EXPECT_TRUE(validate(cat()).ok()); }

TEST_P(Property, EnginePreordersMatchBruteForce) {
  CellEngine engine(cat());
  auto o = brute_orders(cat());
  for (auto f : cat().morph_ids()) {
    for (auto g : cat().morph_ids()) {
      EXPECT_EQ(engine.leq_R(f, g), o.right[f.index][g.index]);
      EXPECT_EQ(engine.leq_L(f, g), o.left[f.index][g.index]);
      EXPECT_EQ(engine.leq_LR(f, g), o.two[f.index][g.index]);
    }
  }
}

TEST_P(Property, NoIdentityViolations) {
  for (const auto& [identity, violations] : oracle::identity_violations(cat())) {
    EXPECT_TRUE(violations.empty()) << identity << ": " << violations.front();
  }
}

TEST_P(Property, OrderFactorization) {
  auto o = brute_orders(cat());
  const auto n = cat().morph_count();
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      bool right_then_left = false;
      bool left_then_right = false;
      for (std::size_t h = 0; h < n; ++h) {
        right_then_left |= o.right[f][h] && o.left[h][g];
        left_then_right |= o.left[f][h] && o.right[h][g];
      }
      EXPECT_EQ(o.two[f][g], right_then_left);
      EXPECT_EQ(o.two[f][g], left_then_right);
    }
  }
}

TEST_P(Property, StarPreservesTwoSidedCell) {
  auto o = brute_orders(cat());
  for (auto f : cat().morph_ids()) {
    auto s = cat().star(f);
    EXPECT_TRUE(o.two[f.index][s.index] && o.two[s.index][f.index]) << cat().label(f);
  }
}

TEST_P(Property, AllTwoSidedCellsStronglyRegular) {
  CellEngine engine(cat());
  const auto& left = engine.cells(CellKind::left);
  const auto& right = engine.cells(CellKind::right);
  for (std::size_t q = 0; q < engine.cells(CellKind::two_sided).size(); ++q) {
    auto verdict = engine.classify_two_sided(q);
    EXPECT_TRUE(verdict.strongly_regular);
    for (auto l : engine.left_cells_in(q)) {
      for (auto r : engine.right_cells_in(q)) {
        auto n = std::count_if(left[l].begin(), left[l].end(),
                               [&](MorphId m) { return right.of(m) == r; });
        EXPECT_EQ(n, 1);
      }
    }
  }
}

TEST_P(Property, MCoefficientIdentities) {
  const auto& c = cat();
  CellEngine engine(c);
  const auto& left = engine.cells(CellKind::left);
  const auto& right = engine.cells(CellKind::right);
  const auto& two = engine.cells(CellKind::two_sided);
  for (std::size_t q = 0; q < two.size(); ++q) {
    auto table = m_table(engine, q);
    const auto& members = two[q];
    // Summands above the cell act as zero on it.
    auto in_cell = [&](const Multiset& composite) {
      Multiset kept;
      for (const auto& [k, n] : composite) {
        if (two.of(k) == q) {
          kept.add(k, n);
        }
      }
      return kept;
    };
    auto self_dual_in = [&](const std::vector<MorphId>& cell) {
      std::vector<MorphId> out;
      for (auto m : cell) {
        if (c.star(m) == m) {
          out.push_back(m);
        }
      }
      return out;
    };
    for (auto f : members) {
      for (auto h : members) {
        if (c.tgt(f) != c.tgt(h)) {
          continue;
        }
        // Purity: inside the cell, star(H)∘F is a multiple of the element of L_{star H} ∩ R_F.
        auto composite = in_cell(c.compose(c.star(h), f));
        auto coeff = table.m.at({f, h});
        if (coeff.m == 0) {
          EXPECT_TRUE(composite.empty());
        } else {
          ASSERT_EQ(composite.size(), 1u);
          auto g = composite.begin()->first;
          EXPECT_EQ(left.of(g), left.of(c.star(h)));
          EXPECT_EQ(right.of(g), right.of(f));
        }
        // Symmetry.
        if (right.of(f) == right.of(h)) {
          EXPECT_EQ(coeff.m, table.m.at({h, f}).m);
        }
      }
      EXPECT_GE(table.diagonal(f), 1);
    }
    for (auto f : members) {
      auto g_list = self_dual_in(right[right.of(f)]);
      auto h_list = self_dual_in(left[left.of(f)]);
      ASSERT_EQ(g_list.size(), 1u);
      ASSERT_EQ(h_list.size(), 1u);
      auto g = g_list[0];
      auto h = h_list[0];
      const auto& mf = table.diagonal(f);
      // F∘G = m_{G,G} F for the self-dual G in the right cell of F.
      EXPECT_EQ(in_cell(c.compose(f, g)), Multiset::single(f, table.diagonal(g)));
      // Product identity.
      EXPECT_EQ(mf * table.diagonal(g), table.diagonal(c.star(f)) * table.diagonal(h));
      // Dominance and divisibility against the self-dual H in the left cell of F.
      EXPECT_LE(mf, table.diagonal(h));
      EXPECT_EQ(table.diagonal(h) % mf, 0);
    }
  }
}

TEST_P(Property, CartanBlocksSymmetricAndAgree) {
  CellEngine engine(cat());
  for (std::size_t r = 0; r < engine.cells(CellKind::right).size(); ++r) {
    for (const auto& block : cartan_blocks(engine, r)) {
      const auto n = block.basis.size();
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_GE(block.matrix[i][i], 1);
        for (std::size_t j = 0; j < n; ++j) {
          EXPECT_EQ(block.matrix[i][j], block.matrix[j][i]);
          EXPECT_GE(block.matrix[i][j], 0);
        }
      }
    }
  }
  for (std::size_t q = 0; q < engine.cells(CellKind::two_sided).size(); ++q) {
    EXPECT_TRUE(check_left_constancy(engine, q).holds);
    EXPECT_TRUE(cartan_blocks_agree(engine, q).agree);
  }
}

TEST_P(Property, AnnihilatorsAreCoideals) {
  const auto& c = cat();
  CellEngine engine(c);
  auto o = brute_orders(c);
  for (auto g : c.morph_ids()) {
    auto ann = engine.annihilator_of_simple(g);
    for (auto f : c.morph_ids()) {
      if (c.src(f) != c.tgt(g)) {
        continue;
      }
      // F·L_G ≠ 0 iff some H has G as a summand of star(F)∘H.
      bool acts = false;
      for (auto h : c.morph_ids()) {
        if (c.tgt(h) == c.tgt(f) && c.compose(c.star(f), h).contains(g)) {
          acts = true;
        }
      }
      bool killed = std::find(ann.begin(), ann.end(), f) != ann.end();
      EXPECT_EQ(killed, !acts) << c.label(f) << " on L_" << c.label(g);
      if (!killed) {
        continue;
      }
      for (auto k : c.morph_ids()) {
        if (c.src(k) == c.tgt(g) && o.right[f.index][k.index]) {
          EXPECT_TRUE(std::find(ann.begin(), ann.end(), k) != ann.end());
        }
      }
    }
  }
}

TEST_P(Property, LintPasses) {
  auto report = fiat_lint(cat());
  for (const auto& check : report.checks) {
    EXPECT_NE(check.status, CheckStatus::fail) << check.id;
  }
  EXPECT_FALSE(report.fiat_certified_impossible);
}

TEST_P(Property, CellRestrictionsValidate) {
  CellEngine engine(cat());
  for (std::size_t q = 0; q < engine.cells(CellKind::two_sided).size(); ++q) {
    auto r = cell_subcategory(engine, q);
    EXPECT_TRUE(validate(r.cat).ok());
  }
}

TEST_P(Property, SerializationAndRelabelling) {
  const auto& c = cat();
  auto text = serialize_multicat(c);
  EXPECT_EQ(load_multicat(text), c);
  auto doc = nlohmann::json::parse(text);
  std::mt19937_64 rng(property_seed + GetParam());
  std::shuffle(doc["morphisms"].begin(), doc["morphisms"].end(), rng);
  std::shuffle(doc["objects"].begin(), doc["objects"].end(), rng);
  auto shuffled = load_multicat(doc.dump());
  if (c.morph_count() <= 30) {
    EXPECT_TRUE(find_isomorphism(c, shuffled).has_value());
  }
  // Cell counts do not depend on declaration order.
  CellEngine a(c);
  CellEngine b(shuffled);
  for (auto kind : {CellKind::left, CellKind::right, CellKind::two_sided}) {
    EXPECT_EQ(a.cells(kind).size(), b.cells(kind).size());
  }
}

INSTANTIATE_TEST_SUITE_P(AllTables, Property, ::testing::Range<std::size_t>(0, 7 + random_tables), fixture_name);
