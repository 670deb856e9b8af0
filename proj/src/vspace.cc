#include "qperc/vspace.h"

#include <cmath>
#include <stdexcept>

namespace qperc {
namespace {

constexpr std::uint64_t kEnsembleStream = 1;
constexpr std::uint64_t kMeasurementStream = 2;

void require_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("gamma must lie in (0, 1)");
  }
}

std::vector<double> gaussian_vector(std::size_t dim, Rng& rng) {
  std::vector<double> w(dim);
  for (double& x : w) x = rng.normal();
  return w;
}

}  // namespace

void VSTrainConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  require_gamma(gamma_bound);
  if (!(base > 1.0 && base < 2.0)) {
    throw std::invalid_argument("search base c must lie in (1, 2)");
  }
  if (k_override && *k_override == 0) {
    throw std::invalid_argument("K override must be positive");
  }
}

bool in_version_space(std::span<const double> weights,
                      const TrainingSet& data) {
  if (weights.size() != data.dim()) {
    throw std::invalid_argument("in_version_space: dimension mismatch");
  }
  for (const LabeledExample& ex : data) {
    if (!(ex.label * dot(weights, ex.features) > 0.0)) return false;
  }
  return true;
}

double margin_probability(double gamma) {
  require_gamma(gamma);
  return std::erf(gamma / std::sqrt(2.0));
}

std::size_t required_k(double gamma, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1)");
  }
  return std::max<std::size_t>(
      1, ceil_count(std::log(1.0 / delta) / margin_probability(gamma)));
}

VersionSpaceEnsemble sample_ensemble(std::size_t k, std::size_t dim,
                                     std::uint64_t seed) {
  if (k == 0 || dim == 0) {
    throw std::invalid_argument("sample_ensemble: K and D must be positive");
  }
  Rng rng(seed);
  VersionSpaceEnsemble ensemble;
  ensemble.dim = dim;
  ensemble.seed = seed;
  ensemble.candidates.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    ensemble.candidates.push_back(gaussian_vector(dim, rng));
  }
  return ensemble;
}

TrainReport search_version_space(const TrainingSet& data,
                                 const VersionSpaceEnsemble& ensemble,
                                 double epsilon, double base, Rng& rng) {
  if (ensemble.dim != data.dim()) {
    throw std::invalid_argument("ensemble dimension does not match data");
  }
  const std::uint64_t n = data.size();
  const QueryCost cost{.quantum_per_iteration = 2 * n,
                       .composite_per_iteration = 1,
                       .classical_per_verification = n};
  const GroverInstance instance(ensemble.size(), [&](std::size_t j) {
    return in_version_space(ensemble.candidates[j], data);
  });

  TrainReport report;
  const auto found = exponential_search(
      instance, base, failure_rounds_for(epsilon / 2.0), rng, report.ledger,
      [&](std::size_t j) {
        ++report.updates_made;
        return in_version_space(ensemble.candidates[j], data);
      },
      cost);
  if (found) {
    report.model = PerceptronModel{ensemble.candidates[*found]};
    report.converged = true;
  } else {
    report.model = PerceptronModel::zeros(data.dim());
  }
  return report;
}

TrainReport train_version_space_quantum(const TrainingSet& data,
                                        const VSTrainConfig& config) {
  config.validate();
  const std::size_t k =
      config.k_override.value_or(required_k(config.gamma_bound,
                                            config.epsilon / 2.0));
  const VersionSpaceEnsemble ensemble = sample_ensemble(
      k, data.dim(), mix_seed(config.seed, kEnsembleStream));
  Rng rng(mix_seed(config.seed, kMeasurementStream));
  return search_version_space(data, ensemble, config.epsilon, config.base,
                              rng);
}

TrainReport train_version_space_classical(const TrainingSet& data,
                                          const VSTrainConfig& config) {
  config.validate();
  const std::size_t k = config.k_override.value_or(
      required_k(config.gamma_bound, config.epsilon));
  Rng rng(mix_seed(config.seed, kEnsembleStream));
  TrainReport report;
  report.model = PerceptronModel::zeros(data.dim());
  for (std::size_t draw = 0; draw < k; ++draw) {
    std::vector<double> candidate = gaussian_vector(data.dim(), rng);
    report.ledger.add_classical(data.size());
    ++report.updates_made;
    if (in_version_space(candidate, data)) {
      report.model = PerceptronModel{std::move(candidate)};
      report.converged = true;
      break;
    }
  }
  return report;
}

double version_space_hit_rate(const TrainingSet& data, std::size_t draws,
                              std::uint64_t seed) {
  if (draws == 0) throw std::invalid_argument("draws must be positive");
  Rng rng(seed);
  std::vector<double> w(data.dim());
  std::size_t hits = 0;
  for (std::size_t i = 0; i < draws; ++i) {
    for (double& x : w) x = rng.normal();
    if (in_version_space(w, data)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(draws);
}

}  // namespace qperc
