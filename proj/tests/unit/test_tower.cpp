#include <gtest/gtest.h>

#include "generators.hpp"
#include "ltower/corpus.hpp"
#include "ltower/derived_cover.hpp"
#include "ltower/errors.hpp"
#include "ltower/gen_poly.hpp"
#include "ltower/tower.hpp"
#include "ltower/tower_spec.hpp"
#include "oracle.hpp"

using namespace ltower;

namespace {

VoltageAssignment example(const std::string& id) {
  return build_voltage_assignment(corpus_example(id).spec);
}

struct RandomTower {
  gen::BaseGraph graph;
  std::vector<long long> voltages;
  std::uint64_t ell;
};

// Admissible base graph with voltages whose covers are connected.
RandomTower random_tower(gen::Rng& rng, const std::vector<std::uint64_t>& ells) {
  for (;;) {
    RandomTower t{gen::random_admissible_graph(rng, 3, 5), {}, rng.pick(ells)};
    for (std::size_t s = 0; s < t.graph.arcs.size(); ++s) t.voltages.push_back(rng.integer(-6, 6));
    const auto va = VoltageAssignment::from_integers(t.graph.multigraph(), t.ell, 4, t.voltages);
    if (cycle_voltages_generate(va, 1)) return t;
  }
}

std::vector<std::pair<long long, long long>> laurent_terms(const GenPoly& f) {
  const Integerized in = integerize(f);
  std::vector<std::pair<long long, long long>> terms;
  const auto& c = in.U.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) terms.emplace_back(static_cast<long long>(k) - in.b, c[k].get_si());
  }
  return terms;
}

}  // namespace

TEST(LevelNorm, KnownValues) {
  EXPECT_EQ(level_norm(determinant(voltage_matrix(example("b3-ell5"))), 1), 2025);
  EXPECT_EQ(level_norm(determinant(voltage_matrix(example("theta-ell5"))), 1), 400);
  EXPECT_EQ(level_norm(determinant(voltage_matrix(example("b3-ell5"))), 0), 1);
}

TEST(LevelNorm, ConstantIsRaisedToTotient) {
  const GenPoly c = GenPoly::constant(3, 4, BigInt(5));
  EXPECT_EQ(level_norm(c, 1), 25);
  EXPECT_EQ(level_norm(c, 2), pow(BigInt(5), 6));
  EXPECT_EQ(level_norm(c, 3), pow(BigInt(5), 18));
}

TEST(LevelNorm, VanishingGivesZero) {
  // 1 + T vanishes at -1, the primitive square root of unity.
  GenPoly f = GenPoly::constant(2, 3, BigInt(1));
  f = f + GenPoly::monomial(BigInt(1), TruncatedPadic(2, 3, BigInt(1)), true);
  EXPECT_EQ(level_norm(f, 1), 0);
  EXPECT_EQ(level_norm(f, 2), 2);
}

TEST(LevelNorm, AgreesWithComplexProduct) {
  gen::Rng rng(41);
  int compared = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const RandomTower t = random_tower(rng, {2, 3, 5});
    const auto va = VoltageAssignment::from_integers(t.graph.multigraph(), t.ell, 4, t.voltages);
    const GenPoly f = determinant(voltage_matrix(va));
    const auto terms = laurent_terms(f);
    for (unsigned i = 1; i <= 2; ++i) {
      const BigInt exact = level_norm(f, i);
      if (abs(exact) > BigInt("1000000000000")) continue;
      EXPECT_EQ(exact, oracle::numeric_level_norm(terms, t.ell, i));
      ++compared;
    }
  }
  EXPECT_GT(compared, 50);
}

TEST(Tower, BouquetClosedForm) {
  const Tower tower(example("b3-ell5"), 4);
  for (unsigned n = 0; n <= 4; ++n) {
    const unsigned long sheets = pow_ui(5, n).get_ui();
    EXPECT_EQ(tower.kappa(n), pow(BigInt(3), sheets - 1) * pow(BigInt(5), n)) << n;
  }
  EXPECT_TRUE(tower.cross_check_ok());
  EXPECT_EQ(tower.matrix_tree_level(), 2u);
  EXPECT_FALSE(tower.matrix_tree_kappa(3).has_value());
  EXPECT_EQ(*tower.matrix_tree_kappa(2), tower.kappa(2));
}

TEST(Tower, ThetaGraphFirstLevel) {
  const Tower tower(example("theta-ell5"), 2);
  EXPECT_EQ(tower.kappa(0), 3);
  EXPECT_EQ(tower.kappa(1), 240);
  EXPECT_EQ(tower.norm(1), 400);
  EXPECT_TRUE(tower.cross_check_ok());
}

TEST(Tower, DefaultCrossCheckDepth) {
  EXPECT_EQ(default_matrix_tree_max_level(2), 5u);
  EXPECT_EQ(default_matrix_tree_max_level(3), 3u);
  EXPECT_EQ(default_matrix_tree_max_level(7), 2u);
  TowerOptions options;
  options.matrix_tree_max_level = 0;
  EXPECT_EQ(Tower(example("b4-1122-ell3"), 3, options).matrix_tree_level(), 0u);
}

TEST(Tower, CorpusExamplesCrossCheck) {
  for (const CorpusExample& ex : builtin_corpus()) {
    const auto va = build_voltage_assignment(ex.spec);
    const Tower tower(va, std::min(va.precision(), 3u));
    EXPECT_TRUE(tower.cross_check_ok()) << ex.id;
  }
}

TEST(Tower, MatchesDirectLaplacianOracle) {
  gen::Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const RandomTower t = random_tower(rng, {2, 3});
    const unsigned depth = t.ell == 2 ? 3 : 2;
    const Tower tower(VoltageAssignment::from_integers(t.graph.multigraph(), t.ell, 4, t.voltages),
                      depth);
    for (unsigned n = 0; n <= depth; ++n) {
      EXPECT_EQ(tower.kappa(n),
                oracle::cover_spanning_trees(t.graph.vertices, t.graph.arcs, t.voltages, t.ell, n))
          << "trial " << trial << " level " << n;
    }
  }
}

TEST(Tower, KappaDividesNextLevel) {
  gen::Rng rng(78);
  for (int trial = 0; trial < 40; ++trial) {
    const RandomTower t = random_tower(rng, {2, 3, 5});
    const Tower tower(VoltageAssignment::from_integers(t.graph.multigraph(), t.ell, 4, t.voltages),
                      3);
    for (unsigned n = 0; n < 3; ++n) {
      EXPECT_TRUE(mpz_divisible_p(tower.kappa(n + 1).get_mpz_t(), tower.kappa(n).get_mpz_t()));
    }
  }
}

TEST(Tower, InvariantUnderUnitScalingAndNormalization) {
  gen::Rng rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    const RandomTower t = random_tower(rng, {3, 5});
    const auto va = VoltageAssignment::from_integers(t.graph.multigraph(), t.ell, 4, t.voltages);
    std::vector<long long> scaled;
    for (long long v : t.voltages) scaled.push_back(v * 2);
    const auto conjugate = VoltageAssignment::from_integers(t.graph.multigraph(), t.ell, 4, scaled);
    const Tower a(va, 3);
    const Tower b(conjugate, 3);
    const Tower c(normalize_voltages(va), 3);
    EXPECT_EQ(a.kappas(), b.kappas());
    EXPECT_EQ(a.kappas(), c.kappas());
    EXPECT_EQ(a.norms(), b.norms());
  }
}

TEST(Tower, RejectsBadInput) {
  EXPECT_THROW(Tower(example("b3-ell5"), 5), PrecisionError);
  const auto disconnected =
      VoltageAssignment::from_integers(Multigraph(1, {{0, 0}, {0, 0}}), 5, 3, {5, 10});
  EXPECT_THROW(Tower(disconnected, 1), DisconnectedGraphError);
  EXPECT_NO_THROW(Tower(disconnected, 0));
  const auto leaf = VoltageAssignment::from_integers(Multigraph(2, {{0, 1}, {1, 1}}), 3, 2, {1, 1});
  EXPECT_THROW(Tower(leaf, 1), InapplicableError);
}

TEST(ProductIdentity, Examples) {
  const auto va1 = example("b3-ell5");
  const ProductIdentityCheck c1 = verify_product_identity(va1, determinant(voltage_matrix(va1)), 2);
  EXPECT_TRUE(c1.holds);
  ASSERT_EQ(c1.residuals.size(), 2u);
  EXPECT_EQ(c1.residuals[1], 0);

  const auto va3 = example("theta-ell5");
  EXPECT_TRUE(verify_product_identity(va3, determinant(voltage_matrix(va3)), 1).holds);

  const ProductIdentityCheck empty = verify_product_identity(va1, determinant(voltage_matrix(va1)), 0);
  EXPECT_TRUE(empty.holds);
  EXPECT_TRUE(empty.residuals.empty());
}

TEST(ProductIdentity, WrongPolynomialIsDetected) {
  const auto va = example("theta-ell5");
  const GenPoly wrong = determinant(voltage_matrix(example("theta-ell5"))) +
                        GenPoly::constant(5, 4, BigInt(1));
  EXPECT_FALSE(verify_product_identity(va, wrong, 1).holds);
}
