#include "qperc/core.h"

#include <cmath>
#include <stdexcept>

#include "gtest/gtest.h"
#include "qperc/datagen.h"
#include "qperc/random.h"

namespace qperc {
namespace {

LabeledExample Ex(std::vector<double> phi, int y) {
  return LabeledExample{std::move(phi), y};
}

std::vector<double> RandomUnit(std::size_t dim, Rng& rng) {
  std::vector<double> v(dim);
  for (double& x : v) x = rng.normal();
  const double n = norm2(v);
  for (double& x : v) x /= n;
  return v;
}

TEST(TrainingSetTest, RejectsInvalidExamples) {
  EXPECT_THROW(TrainingSet({}), std::invalid_argument);
  EXPECT_THROW(TrainingSet({Ex({1, 0}, 1), Ex({1, 0, 0}, 1)}),
               std::invalid_argument);
  EXPECT_THROW(TrainingSet({Ex({1, 0}, 0)}), std::invalid_argument);
  EXPECT_THROW(TrainingSet({Ex({1, 0}, 2)}), std::invalid_argument);
  EXPECT_THROW(TrainingSet({Ex({0.5, 0.5}, 1)}), std::invalid_argument);
  // Inside the 1e-9 tolerance is accepted without renormalizing.
  const TrainingSet ok({Ex({1.0 + 5e-10, 0}, 1)});
  EXPECT_EQ(ok[0].features[0], 1.0 + 5e-10);
  EXPECT_THROW(TrainingSet({Ex({1.0 + 2e-9, 0}, 1)}), std::invalid_argument);
}

TEST(TrainingSetTest, KeepsOrder) {
  const TrainingSet data({Ex({1, 0}, 1), Ex({0, 1}, -1), Ex({-1, 0}, 1)});
  ASSERT_EQ(data.size(), 3u);
  EXPECT_EQ(data.dim(), 2u);
  EXPECT_EQ(data[1].label, -1);
  EXPECT_EQ(data[2].features[0], -1.0);
}

TEST(MisclassifiesTest, Examples) {
  EXPECT_TRUE(misclassifies(PerceptronModel::zeros(2), Ex({1, 0}, 1)));
  EXPECT_TRUE(misclassifies(PerceptronModel::zeros(2), Ex({0, 1}, -1)));
  EXPECT_FALSE(misclassifies(PerceptronModel{{0.6, 0.8}}, Ex({0.6, 0.8}, 1)));
  // Tie: y <w, phi> = 0 counts as a mistake.
  EXPECT_TRUE(misclassifies(PerceptronModel{{1, 0}}, Ex({0, 1}, -1)));
}

TEST(MisclassifiesTest, DimensionMismatchThrows) {
  EXPECT_THROW(misclassifies(PerceptronModel{{1, 0, 0}}, Ex({1, 0}, 1)),
               std::invalid_argument);
  EXPECT_THROW(perceptron_update(PerceptronModel{{1}}, Ex({1, 0}, 1)),
               std::invalid_argument);
}

TEST(PerceptronUpdateTest, Examples) {
  const PerceptronModel zero = PerceptronModel::zeros(2);
  const PerceptronModel w1 = perceptron_update(zero, Ex({1, 0}, 1));
  EXPECT_EQ(w1.weights, (std::vector<double>{1, 0}));
  EXPECT_EQ(zero.weights, (std::vector<double>{0, 0}));  // not mutated

  const PerceptronModel w2 =
      perceptron_update(PerceptronModel{{1, 0}}, Ex({0, 1}, -1));
  EXPECT_EQ(w2.weights, (std::vector<double>{1, -1}));
}

TEST(MarginTest, Examples) {
  const TrainingSet single({Ex({1, 0}, 1)});
  EXPECT_DOUBLE_EQ(margin(single, PerceptronModel{{1, 0}}), 1.0);

  const TrainingSet contradictory({Ex({1, 0}, 1), Ex({1, 0}, -1)});
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    EXPECT_LE(margin(contradictory, RandomUnit(2, rng)), 0.0);
  }
  EXPECT_THROW(margin(single, PerceptronModel::zeros(2)), std::invalid_argument);
}

TEST(MarginTest, PlantedSeparatorAchievesPlantedMargin) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PlantedDataset p = generate_margin_dataset(64, 5, 0.15, seed);
    // Brute force over all examples, independent of margin().
    double worst = 1e9;
    for (const auto& ex : p.data) {
      double s = 0;
      for (std::size_t d = 0; d < ex.dim(); ++d) s += p.w_star[d] * ex.features[d];
      worst = std::min(worst, ex.label * s);
    }
    EXPECT_GE(worst, 0.15 - 1e-12);
    EXPECT_NEAR(margin(p.data, p.w_star), worst, 1e-15);
  }
}

// The two predicates partition every case; the update raises the score by
// exactly one; the margin is scale invariant.
TEST(CorePropertyTest, RandomizedInvariants) {
  Rng rng(12345);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t dim = 1 + rng.uniform_int(0, 9);
    PerceptronModel w{std::vector<double>(dim)};
    for (double& x : w.weights) x = rng.normal();
    if (trial % 50 == 0) w = PerceptronModel::zeros(dim);
    const LabeledExample ex = Ex(RandomUnit(dim, rng), rng.bernoulli(0.5) ? 1 : -1);

    const double score = signed_score(w, ex);
    EXPECT_NE(misclassifies(w, ex), score > 0.0);

    const PerceptronModel next = perceptron_update(w, ex);
    EXPECT_NEAR(signed_score(next, ex), score + 1.0, 1e-12);

    if (norm2(w.weights) > 0.0) {
      const TrainingSet data({ex});
      const double scale = std::exp(rng.normal() * 3.0);
      PerceptronModel scaled = w;
      for (double& x : scaled.weights) x *= scale;
      EXPECT_NEAR(margin(data, w), margin(data, scaled), 1e-12);
    }
  }
}

TEST(QueryLedgerTest, StartsAtZeroAndAccumulates) {
  QueryLedger ledger;
  EXPECT_EQ(ledger.quantum_oracle_queries(), 0u);
  EXPECT_EQ(ledger.classical_oracle_queries(), 0u);
  EXPECT_EQ(ledger.composite_oracle_queries(), 0u);
  ledger.add_quantum(3);
  ledger.add_classical(2);
  ledger.add_composite(1);
  QueryLedger other;
  other.add_quantum(1);
  ledger += other;
  EXPECT_EQ(ledger.quantum_oracle_queries(), 4u);
  EXPECT_EQ(ledger.classical_oracle_queries(), 2u);
  EXPECT_EQ(ledger.composite_oracle_queries(), 1u);
}

TEST(CeilCountTest, AbsorbsRoundingNoise) {
  EXPECT_EQ(ceil_count(1.0 / (0.2 * 0.2)), 25u);
  EXPECT_EQ(ceil_count(25.0 + 1e-6), 26u);
  EXPECT_EQ(ceil_count(0.0), 0u);
  EXPECT_EQ(ceil_count(0.3), 1u);
  EXPECT_EQ(ceil_count(std::log(0.01) / std::log(0.75)), 17u);
  EXPECT_THROW(ceil_count(-1.0), std::invalid_argument);
}

}  // namespace
}  // namespace qperc
