#ifndef QPERC_ONLINE_H_
#define QPERC_ONLINE_H_

#include <cstdint>
#include <optional>

#include "qperc/core.h"
#include "qperc/grover.h"
#include "qperc/random.h"

namespace qperc {

struct OnlineTrainConfig {
  double epsilon = 0.1;      // total failure probability, in (0, 1)
  double gamma_bound = 0.1;  // assumed margin lower bound, in (0, 1]
  double base = kDefaultSearchBase;
  std::uint64_t seed = 0;
  bool random_init = false;  // random unit start instead of w = 0

  // Throws std::invalid_argument on out-of-range fields.
  void validate() const;

  // Per-search failure budget epsilon * gamma^2.
  double round_failure_budget() const {
    return epsilon * gamma_bound * gamma_bound;
  }
  // ceil(1 / gamma^2), the mistake-bound cap on updates.
  std::uint64_t update_cap() const;
};

struct TrainReport {
  PerceptronModel model;
  std::uint64_t updates_made = 0;
  bool converged = false;
  QueryLedger ledger;
};

// One round of Grover search for a misclassified example: marks
// f_w(phi_j) = 1 over all j and runs exponential_search with
// ceil(log_{3/4} delta) rounds. Returns the example found, if any.
std::optional<LabeledExample> quantum_find_misclassified(
    const PerceptronModel& model, const TrainingSet& data, double delta,
    double base, Rng& rng, QueryLedger& ledger);

// Draws ceil(N ln(1/delta)) uniform samples with replacement, one classical
// query each, and returns the first misclassified one.
std::optional<LabeledExample> classical_find_misclassified(
    const PerceptronModel& model, const TrainingSet& data, double delta,
    Rng& rng, QueryLedger& ledger);

// Repeats quantum_find_misclassified with delta = epsilon * gamma^2 and
// applies the perceptron update to each example found. Stops when a search
// comes back empty (converged) or once update_cap() updates have been made
// and a further search still finds a mistake (not converged).
TrainReport train_online_quantum(const TrainingSet& data,
                                 const OnlineTrainConfig& config);

// Same loop with classical_find_misclassified.
TrainReport train_online_classical(const TrainingSet& data,
                                   const OnlineTrainConfig& config);

inline constexpr std::uint64_t kStreamingSweepCap = 10000;

// Rosenblatt sweeps in index order, one classical query per example visited.
// Ends after a mistake-free sweep or after ceil(1/gamma^2) + 1 sweeps when a
// margin bound is given (kStreamingSweepCap otherwise). Starts from
// `initial` when given, else from w = 0.
TrainReport train_online_streaming(
    const TrainingSet& data, std::optional<double> gamma_bound = std::nullopt,
    std::optional<PerceptronModel> initial = std::nullopt);

}  // namespace qperc

#endif  // QPERC_ONLINE_H_
