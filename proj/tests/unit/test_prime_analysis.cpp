#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "ltower/corpus.hpp"
#include "ltower/derived_cover.hpp"
#include "ltower/errors.hpp"
#include "ltower/prime_analysis.hpp"
#include "ltower/tower.hpp"
#include "ltower/tower_spec.hpp"
#include "oracle.hpp"

using namespace ltower;

namespace {

Tower example_tower(const std::string& id, unsigned depth) {
  return Tower(build_voltage_assignment(corpus_example(id).spec), depth);
}

std::vector<long> ell_ords(const Tower& t) {
  std::vector<long> out;
  for (const BigInt& k : t.kappas()) out.push_back(ord(k, t.ell()));
  return out;
}

}  // namespace

TEST(Inertia, KnownDegrees) {
  EXPECT_EQ(inertia_degree(2, 3, 2).degree, 6u);
  EXPECT_EQ(inertia_degree(2, 3, 2).prime_count, 1u);
  EXPECT_EQ(inertia_degree(17, 3, 2).degree, 2u);
  EXPECT_EQ(inertia_degree(17, 3, 2).prime_count, 3u);
  EXPECT_EQ(inertia_degree(7, 5, 0).degree, 1u);
  EXPECT_EQ(inertia_degree(3, 2, 1).degree, 1u);
  EXPECT_EQ(eventual_prime_count(109, 3), 18u);
  EXPECT_EQ(eventual_prime_count(17, 2), 8u);
  EXPECT_EQ(eventual_prime_count(7, 2), 4u);
  EXPECT_THROW(inertia_degree(3, 3, 1), InapplicableError);
}

TEST(Inertia, MatchesBruteForceOrders) {
  const std::vector<std::pair<std::uint64_t, unsigned>> ells{{2, 17}, {3, 11}, {5, 7}, {7, 6}};
  for (const auto& [ell, levels] : ells) {
    for (std::uint64_t p = 2; p <= 100; ++p) {
      if (!oracle::is_prime(p) || p == ell) continue;
      std::uint64_t m = 1;
      std::uint64_t best = 0;
      for (unsigned i = 1; i <= levels; ++i) {
        m *= ell;
        const std::uint64_t order = oracle::order_mod(p, m);
        const std::uint64_t phi = m / ell * (ell - 1);
        const InertiaData d = inertia_degree(p, ell, i);
        EXPECT_EQ(d.degree, order) << p << " " << ell << " " << i;
        EXPECT_EQ(d.prime_count, phi / order);
        best = std::max(best, phi / order);
      }
      EXPECT_EQ(eventual_prime_count(p, ell), best) << p << " " << ell;
    }
  }
}

TEST(StabilizationBounds, ConstantPolynomial) {
  const StabilizationBounds sb = stabilization_bounds(IntPoly{3}, 2, 3);
  EXPECT_EQ(sb.n1, 1u);
  EXPECT_EQ(sb.reduced_degree, 0);
  EXPECT_TRUE(std::isinf(sb.log_bound) && sb.log_bound < 0);
  EXPECT_EQ(sb.first_level_past_log_bound(), 1u);
  EXPECT_THROW(stabilization_bounds(IntPoly{2, 4}, 2, 3), InapplicableError);
}

TEST(StabilizationBounds, InertiaExceedsReducedDegree) {
  gen::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    IntPoly u = gen::random_poly(rng, 8, 20);
    const std::uint64_t ell = rng.pick(std::vector<std::uint64_t>{2, 3, 5});
    const std::uint64_t p = rng.pick(std::vector<std::uint64_t>{7, 11, 13, 17, 19});
    if (u.is_zero() || u.content() % p == 0) continue;
    const StabilizationBounds sb = stabilization_bounds(u, p, ell);
    EXPECT_GT(inertia_degree(p, ell, sb.n1).degree, static_cast<std::uint64_t>(sb.reduced_degree));
    if (sb.n1 > 1) {
      EXPECT_LE(inertia_degree(p, ell, sb.n1 - 1).degree,
                static_cast<std::uint64_t>(sb.reduced_degree));
    }
  }
}

TEST(N0Search, KnownValues) {
  const Tower t2 = example_tower("b4-1122-ell3", 3);
  EXPECT_EQ(n0_search(mu_invariant(t2.f(), BigInt(2)).unit_part, 2).n0, 2u);
  EXPECT_EQ(n0_search(t2.f(), 17).n0, 3u);
  const Tower t1 = example_tower("b3-ell5", 2);
  EXPECT_EQ(n0_search(mu_invariant(t1.f(), BigInt(3)).unit_part, 3).n0, 1u);
  const Tower t3 = example_tower("theta-ell5", 2);
  const N0Result r = n0_search(t3.f(), 3);
  EXPECT_EQ(r.n0, 1u);
  EXPECT_TRUE(r.certified);
  EXPECT_THROW(n0_search(t2.f(), 2), InapplicableError);
}

TEST(N0Search, VanishingMatchesNormDivisibility) {
  gen::Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const gen::BaseGraph g = gen::random_admissible_graph(rng, 3, 5);
    std::vector<long long> volts;
    for (std::size_t s = 0; s < g.arcs.size(); ++s) volts.push_back(rng.integer(-8, 8));
    const std::uint64_t ell = rng.pick(std::vector<std::uint64_t>{2, 3, 5});
    const auto va = VoltageAssignment::from_integers(g.multigraph(), ell, 3, volts);
    const GenPoly f = determinant(voltage_matrix(va));
    if (f.is_zero()) continue;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      if (p == ell || mu_invariant(f, BigInt(static_cast<unsigned long>(p))).mu != 0) continue;
      for (unsigned i = 1; i <= 3; ++i) {
        const BigInt n = level_norm(f, i);
        EXPECT_EQ(vanishes_at_level(f, p, i), n % p == 0) << trial << " p=" << p << " i=" << i;
      }
    }
  }
}

TEST(AnalyzePrime, PowerGrowthForTwo) {
  const PrimeAnalysisReport r = analyze_prime(example_tower("b4-1122-ell3", 4), 2);
  EXPECT_EQ(r.mu, 1);
  EXPECT_EQ(r.n0, 2u);
  EXPECT_EQ(r.nu, 1);
  EXPECT_EQ(r.law_from, 1u);
  EXPECT_TRUE(r.divides_any);
  EXPECT_TRUE(r.matches());
  EXPECT_FALSE(r.constant_from.has_value());
  EXPECT_FALSE(r.n1.has_value());
}

TEST(AnalyzePrime, ConstantValuations) {
  const Tower t2 = example_tower("b4-1122-ell3", 4);
  const PrimeAnalysisReport r17 = analyze_prime(t2, 17);
  EXPECT_EQ(r17.mu, 0);
  EXPECT_EQ(r17.n0, 3u);
  EXPECT_EQ(r17.nu, 2);
  EXPECT_EQ(r17.n1, 3u);
  EXPECT_EQ(r17.constant_from, 2u);
  EXPECT_TRUE(r17.matches());
  EXPECT_EQ(*r17.divisibility_criterion, true);
  for (std::uint64_t p : {53, 109}) {
    const PrimeAnalysisReport r = analyze_prime(t2, p);
    EXPECT_EQ(r.nu, 2);
    EXPECT_EQ(r.constant_from, 3u);
    EXPECT_TRUE(r.matches());
  }
  const PrimeAnalysisReport r4 = analyze_prime(example_tower("b4-1222-ell3", 3), 2);
  EXPECT_EQ(r4.nu, 4);
  EXPECT_EQ(r4.constant_from, 1u);
}

TEST(AnalyzePrime, NeverDivides) {
  for (const char* id : {"b3-ell5", "theta-ell5"}) {
    const PrimeAnalysisReport r = analyze_prime(example_tower(id, 3), 7);
    EXPECT_FALSE(r.divides_any) << id;
    EXPECT_EQ(r.nu, 0);
    EXPECT_EQ(*r.divisibility_criterion, false);
    EXPECT_EQ(r.observed, std::vector<long>(4, 0));
  }
}

TEST(AnalyzePrime, ThreeInBouquet) {
  const PrimeAnalysisReport r = analyze_prime(example_tower("b3-ell5", 3), 3);
  EXPECT_EQ(r.mu, 1);
  EXPECT_EQ(r.nu, -1);
  EXPECT_EQ(r.law_from, 0u);
  EXPECT_EQ(r.observed, (std::vector<long>{0, 4, 24, 124}));
}

TEST(AnalyzePrime, RejectsEllAndComposites) {
  const Tower t = example_tower("b3-ell5", 2);
  EXPECT_THROW(analyze_prime(t, 5), InapplicableError);
  EXPECT_THROW(analyze_prime(t, 9), Error);
}

TEST(AnalyzePrime, SqrtExampleTail) {
  const PrimeAnalysisReport r = analyze_prime(example_tower("sqrt17-ell2", 7), 17);
  EXPECT_EQ(r.observed, (std::vector<long>{0, 0, 0, 0, 2, 2, 2, 2}));
  EXPECT_TRUE(r.matches());
  EXPECT_FALSE(r.n0_certified);
}

TEST(IwasawaFit, CorpusTowers) {
  const auto f1 = iwasawa_fit_ell(ell_ords(example_tower("b3-ell5", 4)), 5);
  ASSERT_TRUE(f1.has_value());
  EXPECT_EQ(*f1, (IwasawaFit{0, 1, 0, 1}));
  const auto f5 = iwasawa_fit_ell(ell_ords(example_tower("parallel4-ell2", 6)), 2);
  ASSERT_TRUE(f5.has_value());
  EXPECT_EQ(*f5, (IwasawaFit{0, 5, 2, 2}));
  const auto f6 = iwasawa_fit_ell(ell_ords(example_tower("sqrt17-ell2", 8)), 2);
  ASSERT_TRUE(f6.has_value());
  EXPECT_EQ(*f6, (IwasawaFit{0, 5, -3, 3}));
}

TEST(IwasawaFit, RecoversSyntheticLaws) {
  gen::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t ell = rng.pick(std::vector<std::uint64_t>{2, 3, 5});
    const long mu = static_cast<long>(rng.integer(0, 2));
    const long lambda = static_cast<long>(rng.integer(0, 6));
    const long nu = static_cast<long>(rng.integer(-5, 5));
    const unsigned onset = static_cast<unsigned>(rng.integer(1, 3));
    std::vector<long> ords;
    for (unsigned n = 0; n < onset + 4; ++n) {
      const long law = mu * pow_ui(ell, n).get_si() + lambda * static_cast<long>(n) + nu;
      ords.push_back(n < onset ? static_cast<long>(rng.integer(-3, 3)) : law);
    }
    const auto fit = iwasawa_fit_ell(ords, ell);
    ASSERT_TRUE(fit.has_value());
    EXPECT_LE(fit->onset, onset);
    EXPECT_EQ(fit->mu, mu);
    EXPECT_EQ(fit->lambda, lambda);
    EXPECT_EQ(fit->nu, nu);
  }
}

TEST(IwasawaFit, DegenerateInputs) {
  EXPECT_THROW(iwasawa_fit_ell(std::vector<long>{0, 1, 2}, 2), InsufficientDataError);
  EXPECT_FALSE(iwasawa_fit_ell(std::vector<long>{0, 9, 5, 1, 0}, 3).has_value());
}

TEST(PrimeAnalysisProperties, LawHoldsOnRandomTowers) {
  gen::Rng rng(44);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const gen::BaseGraph g = gen::random_admissible_graph(rng, 3, 5);
    std::vector<long long> volts;
    for (std::size_t s = 0; s < g.arcs.size(); ++s) volts.push_back(rng.integer(-8, 8));
    const std::uint64_t ell = rng.pick(std::vector<std::uint64_t>{2, 3, 5});
    const auto va = VoltageAssignment::from_integers(g.multigraph(), ell, 3, volts);
    if (!cycle_voltages_generate(va, 1)) continue;
    const Tower tower(va, 3);
    for (std::uint64_t p = 2; p <= 50; ++p) {
      if (p == ell || !oracle::is_prime(p)) continue;
      const PrimeAnalysisReport r = analyze_prime(tower, p);
      EXPECT_TRUE(r.matches()) << trial << " p=" << p;
      const std::uint64_t q = ell;
      for (unsigned i = std::max(1u, r.n0); i <= 3; ++i) {
        const long phi = static_cast<long>(pow_ui(q, i).get_ui() / q * (q - 1));
        EXPECT_EQ(ord(tower.norm(i), p), phi * r.mu) << trial << " p=" << p << " i=" << i;
      }
      if (r.n1) EXPECT_LE(r.n0, *r.n1);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}
