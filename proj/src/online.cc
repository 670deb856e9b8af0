#include "qperc/online.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qperc {
namespace {

PerceptronModel initial_model(std::size_t dim, bool random_init, Rng& rng) {
  PerceptronModel model = PerceptronModel::zeros(dim);
  if (!random_init) return model;
  double n = 0.0;
  while (n == 0.0) {
    for (double& w : model.weights) w = rng.normal();
    n = norm2(model.weights);
  }
  for (double& w : model.weights) w /= n;
  return model;
}

template <typename FindFn>
TrainReport train_loop(const TrainingSet& data, const OnlineTrainConfig& config,
                       FindFn&& find) {
  config.validate();
  Rng rng(config.seed);
  TrainReport report;
  report.model = initial_model(data.dim(), config.random_init, rng);
  const double delta = config.round_failure_budget();
  const std::uint64_t cap = config.update_cap();
  while (true) {
    std::optional<LabeledExample> mistake =
        find(report.model, data, delta, rng, report.ledger);
    if (!mistake) {
      report.converged = true;
      break;
    }
    if (report.updates_made == cap) {
      report.converged = false;
      break;
    }
    report.model = perceptron_update(report.model, *mistake);
    ++report.updates_made;
  }
  return report;
}

}  // namespace

void OnlineTrainConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  if (!(gamma_bound > 0.0 && gamma_bound <= 1.0)) {
    throw std::invalid_argument("gamma bound must lie in (0, 1]");
  }
  if (!(base > 1.0 && base < 2.0)) {
    throw std::invalid_argument("search base c must lie in (1, 2)");
  }
  const double budget = round_failure_budget();
  if (!(budget > 0.0 && budget < 1.0)) {
    throw std::invalid_argument("epsilon * gamma^2 must lie in (0, 1)");
  }
}

std::uint64_t OnlineTrainConfig::update_cap() const {
  return ceil_count(1.0 / (gamma_bound * gamma_bound));
}

std::optional<LabeledExample> quantum_find_misclassified(
    const PerceptronModel& model, const TrainingSet& data, double delta,
    double base, Rng& rng, QueryLedger& ledger) {
  const GroverInstance instance(data.size(), [&](std::size_t j) {
    return misclassifies(model, data[j]);
  });
  const auto found = exponential_search(
      instance, base, failure_rounds_for(delta), rng, ledger,
      [&](std::size_t j) { return misclassifies(model, data[j]); });
  if (!found) return std::nullopt;
  return data[*found];
}

std::optional<LabeledExample> classical_find_misclassified(
    const PerceptronModel& model, const TrainingSet& data, double delta,
    Rng& rng, QueryLedger& ledger) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("failure probability must lie in (0, 1)");
  }
  const std::uint64_t draws = std::max<std::uint64_t>(
      1, ceil_count(static_cast<double>(data.size()) * std::log(1.0 / delta)));
  for (std::uint64_t i = 0; i < draws; ++i) {
    const std::size_t j = rng.uniform_int(0, data.size() - 1);
    ledger.add_classical(1);
    if (misclassifies(model, data[j])) return data[j];
  }
  return std::nullopt;
}

TrainReport train_online_quantum(const TrainingSet& data,
                                 const OnlineTrainConfig& config) {
  return train_loop(data, config,
                    [&](const PerceptronModel& model, const TrainingSet& d,
                        double delta, Rng& rng, QueryLedger& ledger) {
                      return quantum_find_misclassified(model, d, delta,
                                                        config.base, rng,
                                                        ledger);
                    });
}

TrainReport train_online_classical(const TrainingSet& data,
                                   const OnlineTrainConfig& config) {
  return train_loop(data, config,
                    [](const PerceptronModel& model, const TrainingSet& d,
                       double delta, Rng& rng, QueryLedger& ledger) {
                      return classical_find_misclassified(model, d, delta, rng,
                                                          ledger);
                    });
}

TrainReport train_online_streaming(const TrainingSet& data,
                                   std::optional<double> gamma_bound,
                                   std::optional<PerceptronModel> initial) {
  std::uint64_t sweep_cap = kStreamingSweepCap;
  if (gamma_bound) {
    if (!(*gamma_bound > 0.0 && *gamma_bound <= 1.0)) {
      throw std::invalid_argument("gamma bound must lie in (0, 1]");
    }
    sweep_cap = ceil_count(1.0 / (*gamma_bound * *gamma_bound)) + 1;
  }
  TrainReport report;
  report.model = initial ? std::move(*initial) : PerceptronModel::zeros(data.dim());
  if (report.model.dim() != data.dim()) {
    throw std::invalid_argument("initial model dimension does not match data");
  }
  for (std::uint64_t sweep = 0; sweep < sweep_cap; ++sweep) {
    bool clean = true;
    for (const LabeledExample& ex : data) {
      report.ledger.add_classical(1);
      if (misclassifies(report.model, ex)) {
        report.model = perceptron_update(report.model, ex);
        ++report.updates_made;
        clean = false;
      }
    }
    if (clean) {
      report.converged = true;
      break;
    }
  }
  return report;
}

}  // namespace qperc
