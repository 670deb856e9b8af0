#include "qperc/harness.h"

#include <cmath>
#include <sstream>

#include "gtest/gtest.h"
#include "qperc/datagen.h"

namespace qperc {
namespace {

SweepSpec SmallSpec(Algorithm algorithm) {
  SweepSpec spec;
  spec.algorithm = algorithm;
  spec.axis = SweepAxis::kN;
  spec.axis_values = {16, 32, 64};
  spec.fixed.dim = 5;
  spec.fixed.gamma = 0.2;
  spec.fixed.trials = 3;
  spec.fixed.base_seed = 77;
  return spec;
}

std::string CsvWithoutWallTime(std::vector<RunRecord> records) {
  for (auto& r : records) r.wall_ms = 0;
  std::ostringstream out;
  write_records_csv(out, records);
  return out.str();
}

TEST(AlgorithmTagTest, RoundTripAndUnknown) {
  for (Algorithm a : {Algorithm::kOnlineQuantum, Algorithm::kOnlineClassical,
                      Algorithm::kOnlineStreaming, Algorithm::kVspaceQuantum,
                      Algorithm::kVspaceClassical}) {
    EXPECT_EQ(parse_algorithm(algorithm_tag(a)), a);
  }
  EXPECT_THROW(parse_algorithm("online-magic"), std::invalid_argument);
  EXPECT_EQ(parse_axis("gamma"), SweepAxis::kGamma);
  EXPECT_THROW(parse_axis("D"), std::invalid_argument);
}

TEST(SweepSpecTest, Validation) {
  SweepSpec spec = SmallSpec(Algorithm::kOnlineQuantum);
  EXPECT_NO_THROW(spec.validate());
  spec.axis_values = {};
  EXPECT_THROW(spec.validate(), std::invalid_argument);
  spec.axis_values = {32, 16};
  EXPECT_THROW(spec.validate(), std::invalid_argument);
  spec.axis_values = {16, 16};
  EXPECT_THROW(spec.validate(), std::invalid_argument);
  spec.axis_values = {16, 32.5};
  EXPECT_THROW(spec.validate(), std::invalid_argument);
  spec.axis_values = {16};
  spec.fixed.trials = 0;
  EXPECT_THROW(spec.validate(), std::invalid_argument);
}

TEST(SweepSpecTest, JsonRoundTrip) {
  const auto j = nlohmann::json::parse(R"({
    "algorithm": "vspace-quantum", "axis": "gamma",
    "axis_values": [0.05, 0.1],
    "fixed_params": {"N": 32, "D": 4, "epsilon": 0.2, "c": 1.3,
                     "trials": 2, "base_seed": 9, "k_override": 11}})");
  const SweepSpec spec = SweepSpec::from_json(j);
  EXPECT_EQ(spec.algorithm, Algorithm::kVspaceQuantum);
  EXPECT_EQ(spec.axis, SweepAxis::kGamma);
  EXPECT_EQ(spec.fixed.n, 32u);
  EXPECT_EQ(spec.fixed.base, 1.3);
  EXPECT_EQ(spec.fixed.k_override, std::optional<std::size_t>(11));
  const SweepSpec again = SweepSpec::from_json(spec.to_json());
  EXPECT_EQ(again.to_json(), spec.to_json());
}

TEST(RunSweepTest, OneTrialOneRecordPerValue) {
  SweepSpec spec = SmallSpec(Algorithm::kOnlineClassical);
  spec.fixed.trials = 1;
  const auto records = run_sweep(spec, 1);
  ASSERT_EQ(records.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(records[i].axis_value, spec.axis_values[i]);
    EXPECT_EQ(records[i].n, static_cast<std::size_t>(spec.axis_values[i]));
    EXPECT_EQ(records[i].trial, 0u);
    EXPECT_EQ(records[i].axis, "N");
    EXPECT_EQ(records[i].algo, "online-classical");
  }
}

TEST(RunSweepTest, DeterministicAndThreadIndependent) {
  for (Algorithm a : {Algorithm::kOnlineQuantum, Algorithm::kVspaceQuantum}) {
    const SweepSpec spec = SmallSpec(a);
    const std::string one = CsvWithoutWallTime(run_sweep(spec, 1));
    EXPECT_EQ(one, CsvWithoutWallTime(run_sweep(spec, 1)));
    EXPECT_EQ(one, CsvWithoutWallTime(run_sweep(spec, 4)));
  }
}

TEST(RunSweepTest, SortedByAxisThenTrial) {
  const auto records = run_sweep(SmallSpec(Algorithm::kOnlineQuantum), 3);
  ASSERT_EQ(records.size(), 9u);
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& a = records[i - 1];
    const auto& b = records[i];
    EXPECT_TRUE(a.axis_value < b.axis_value ||
                (a.axis_value == b.axis_value && a.trial + 1 == b.trial));
  }
}

TEST(RunSweepTest, GammaAxisOverridesFixedGamma) {
  SweepSpec spec = SmallSpec(Algorithm::kOnlineStreaming);
  spec.axis = SweepAxis::kGamma;
  spec.axis_values = {0.1, 0.3};
  spec.fixed.n = 20;
  spec.fixed.trials = 1;
  const auto records = run_sweep(spec, 1);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].gamma, 0.1);
  EXPECT_EQ(records[1].gamma, 0.3);
  EXPECT_EQ(records[1].n, 20u);
}

TEST(CellSeedTest, StableAndDistinct) {
  EXPECT_EQ(cell_seed(5, 64, 3), cell_seed(5, 64, 3));
  EXPECT_NE(cell_seed(5, 64, 3), cell_seed(5, 64, 4));
  EXPECT_NE(cell_seed(5, 64, 3), cell_seed(5, 128, 3));
  EXPECT_EQ(cell_seed(5, 64, 3) ^ 5, cell_seed(6, 64, 3) ^ 6);
}

TEST(RunSingleTest, FillsCounters) {
  const auto p = generate_margin_dataset(40, 4, 0.2, 1);
  RunParams params;
  params.seed = 3;
  const RunRecord r = run_single(Algorithm::kOnlineClassical, p.data, params);
  EXPECT_EQ(r.axis, "none");
  EXPECT_EQ(r.n, 40u);
  EXPECT_EQ(r.q_queries, 0u);
  EXPECT_GT(r.c_queries, 0u);
  EXPECT_TRUE(r.converged);
}

TEST(RecordCsvTest, RoundTripFieldForField) {
  const auto records = run_sweep(SmallSpec(Algorithm::kVspaceClassical), 2);
  std::stringstream csv;
  write_records_csv(csv, records);
  EXPECT_EQ(csv.str().substr(0, kRecordCsvHeader.size()), kRecordCsvHeader);
  const auto back = read_records_csv(csv);
  ASSERT_EQ(back.size(), records.size());
  for (std::size_t i = 0; i < back.size(); ++i) EXPECT_EQ(back[i], records[i]);

  std::istringstream bad("algo,axis\nx,y\n");
  EXPECT_THROW(read_records_csv(bad), std::invalid_argument);
}

TEST(RecordFieldTest, KnownAndUnknownColumns) {
  RunRecord r;
  r.q_queries = 12;
  r.gamma = 0.25;
  r.converged = true;
  EXPECT_EQ(record_field(r, "q_queries"), 12.0);
  EXPECT_EQ(record_field(r, "gamma"), 0.25);
  EXPECT_EQ(record_field(r, "converged"), 1.0);
  EXPECT_THROW(record_field(r, "algo"), std::invalid_argument);
  EXPECT_THROW(record_field(r, "nope"), std::invalid_argument);
}

TEST(FitTest, KnownPowerLaws) {
  const std::vector<double> xs = {1, 2, 4, 8, 16};
  std::vector<double> lin, root;
  for (double x : xs) {
    lin.push_back(x);
    root.push_back(3 * std::sqrt(x));
  }
  const ExponentFit a = fit_loglog(xs, lin);
  EXPECT_NEAR(a.slope, 1.0, 1e-12);
  EXPECT_NEAR(a.intercept, 0.0, 1e-12);
  EXPECT_NEAR(a.r_squared, 1.0, 1e-12);
  const ExponentFit b = fit_loglog(xs, root);
  EXPECT_NEAR(b.slope, 0.5, 1e-12);
  EXPECT_NEAR(b.intercept, std::log(3.0), 1e-12);

  EXPECT_THROW(fit_loglog(std::vector<double>{1, 2}, std::vector<double>{1, 2}),
               std::invalid_argument);
  EXPECT_THROW(fit_loglog(std::vector<double>{1, 2, 3},
                          std::vector<double>{1, 0, 3}),
               std::invalid_argument);
}

TEST(FitTest, GroupsRecordsByMedian) {
  std::vector<RunRecord> records;
  for (double n : {10.0, 100.0, 1000.0}) {
    for (double scale : {0.5, 1.0, 40.0}) {
      RunRecord r;
      r.axis_value = n;
      r.n = static_cast<std::size_t>(n);
      r.c_queries = static_cast<std::uint64_t>(scale * n);
      records.push_back(r);
    }
  }
  const ExponentFit fit = fit_exponent(records, "N", "c_queries");
  EXPECT_NEAR(fit.slope, 1.0, 1e-12);
  EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);
}

TEST(MedianTest, OddAndEven) {
  EXPECT_EQ(median({3, 1, 2}), 2.0);
  EXPECT_EQ(median({4, 1, 2, 3}), 2.5);
  EXPECT_THROW(median({}), std::invalid_argument);
}

}  // namespace
}  // namespace qperc
