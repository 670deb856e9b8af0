#ifndef QPERC_HARNESS_H_
#define QPERC_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qperc/core.h"
#include "qperc/online.h"

namespace qperc {

enum class Algorithm {
  kOnlineQuantum,
  kOnlineClassical,
  kOnlineStreaming,
  kVspaceQuantum,
  kVspaceClassical,
};

std::string_view algorithm_tag(Algorithm algorithm);
// Throws std::invalid_argument on an unknown tag.
Algorithm parse_algorithm(std::string_view tag);

enum class SweepAxis { kN, kGamma };

std::string_view axis_tag(SweepAxis axis);
SweepAxis parse_axis(std::string_view tag);

struct RunParams {
  double gamma = 0.2;  // margin bound handed to the trainer
  double epsilon = 0.1;
  double base = kDefaultSearchBase;
  std::uint64_t seed = 0;
  std::optional<std::size_t> k_override;
};

struct FixedParams {
  std::size_t n = 256;
  std::size_t dim = 8;
  double gamma = 0.2;
  double epsilon = 0.1;
  double base = kDefaultSearchBase;
  std::size_t trials = 1;
  std::uint64_t base_seed = 0;
  std::optional<std::size_t> k_override;
};

struct SweepSpec {
  Algorithm algorithm = Algorithm::kOnlineQuantum;
  SweepAxis axis = SweepAxis::kN;
  std::vector<double> axis_values;
  FixedParams fixed;

  // Nonempty strictly increasing axis values, trials >= 1, integral N.
  void validate() const;

  // {"algorithm": tag, "axis": "N"|"gamma", "axis_values": [...],
  //  "fixed_params": {"N", "D", "gamma", "epsilon", "c", "trials",
  //                   "base_seed", "k_override"}}
  static SweepSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct RunRecord {
  std::string algo;
  std::string axis;
  double axis_value = 0.0;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t dim = 0;
  double gamma = 0.0;
  double epsilon = 0.0;
  double c = 0.0;
  std::uint64_t updates = 0;
  bool converged = false;
  std::uint64_t q_queries = 0;
  std::uint64_t c_queries = 0;
  std::uint64_t g_queries = 0;
  double wall_ms = 0.0;

  bool operator==(const RunRecord&) const = default;
};

// base_seed XOR a stable hash of (axis value, trial).
std::uint64_t cell_seed(std::uint64_t base_seed, double axis_value,
                        std::uint64_t trial);

// Runs one trainer and returns its report.
TrainReport run_algorithm(Algorithm algorithm, const TrainingSet& data,
                          const RunParams& params);

// Runs one trainer and fills every record field except the axis/trial
// bookkeeping (axis = "none").
RunRecord run_single(Algorithm algorithm, const TrainingSet& data,
                     const RunParams& params);

// Every (axis value, trial) cell, each on a fresh planted dataset. Cells run
// on `threads` workers (0 = hardware concurrency); output is sorted by axis
// value then trial regardless of completion order.
std::vector<RunRecord> run_sweep(const SweepSpec& spec, unsigned threads = 0);

inline constexpr std::string_view kRecordCsvHeader =
    "algo,axis,axis_value,trial,seed,N,D,gamma,epsilon,c,updates,converged,"
    "q_queries,c_queries,g_queries,wall_ms";

void write_records_csv(std::ostream& out, std::span<const RunRecord> records);
std::vector<RunRecord> read_records_csv(std::istream& in);
nlohmann::json record_to_json(const RunRecord& record);

// Numeric value of a CSV column; throws std::invalid_argument for unknown or
// non-numeric columns.
double record_field(const RunRecord& record, std::string_view field);

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Least squares on (ln x, ln median y) with records grouped by exact x.
// Requires >= 3 distinct x values and positive x and median y.
ExponentFit fit_exponent(std::span<const RunRecord> records,
                         std::string_view x_field, std::string_view y_field);

// Same fit on raw points, already aggregated.
ExponentFit fit_loglog(std::span<const double> xs, std::span<const double> ys);

double median(std::vector<double> values);

}  // namespace qperc

#endif  // QPERC_HARNESS_H_
