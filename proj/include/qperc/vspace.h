#ifndef QPERC_VSPACE_H_
#define QPERC_VSPACE_H_

// Version-space training: sample K Gaussian hyperplanes, then search the
// ensemble for one that separates every training example.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qperc/core.h"
#include "qperc/grover.h"
#include "qperc/online.h"
#include "qperc/random.h"

namespace qperc {

// K unnormalized draws from N(0, I_D).
struct VersionSpaceEnsemble {
  std::vector<std::vector<double>> candidates;
  std::size_t dim = 0;
  std::uint64_t seed = 0;

  std::size_t size() const { return candidates.size(); }
};

struct VSTrainConfig {
  double epsilon = 0.1;      // in (0, 1)
  double gamma_bound = 0.1;  // in (0, 1)
  double base = kDefaultSearchBase;
  std::optional<std::size_t> k_override;
  std::uint64_t seed = 0;

  void validate() const;
};

// Strict: y_i <w, phi_i> > 0 for all i.
bool in_version_space(std::span<const double> weights, const TrainingSet& data);

// erf(gamma / sqrt(2)): the probability that a standard normal lands in
// (-gamma, gamma). Used as the per-draw hit rate when sizing K.
double margin_probability(double gamma);

// ceil(ln(1/delta) / margin_probability(gamma)).
std::size_t required_k(double gamma, double delta);

VersionSpaceEnsemble sample_ensemble(std::size_t k, std::size_t dim,
                                     std::uint64_t seed);

// Grover search over a fixed ensemble. Each iteration of the membership
// reflection costs 2N quantum queries and one composite query; each
// classical check of a measured candidate costs N classical queries. On
// success the model is the candidate; otherwise the zero model.
// updates_made counts the candidates that were classically checked.
TrainReport search_version_space(const TrainingSet& data,
                                 const VersionSpaceEnsemble& ensemble,
                                 double epsilon, double base, Rng& rng);

// K = k_override or required_k(gamma, epsilon/2); search with
// ceil(log_{3/4}(epsilon/2)) rounds.
TrainReport train_version_space_quantum(const TrainingSet& data,
                                        const VSTrainConfig& config);

// Rejection sampling over the same candidate stream: test draws one at a
// time (N classical queries each) until one separates the data or
// required_k(gamma, epsilon) draws are spent.
TrainReport train_version_space_classical(const TrainingSet& data,
                                          const VSTrainConfig& config);

// Fraction of `draws` N(0, I) samples that fall in the version space.
double version_space_hit_rate(const TrainingSet& data, std::size_t draws,
                              std::uint64_t seed);

}  // namespace qperc

#endif  // QPERC_VSPACE_H_
