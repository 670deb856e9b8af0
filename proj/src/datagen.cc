#include "qperc/datagen.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "qperc/dataset_io.h"
#include "qperc/online.h"
#include "qperc/random.h"

namespace qperc {
namespace {

std::vector<double> unit_gaussian(std::size_t dim, Rng& rng) {
  std::vector<double> v(dim);
  double n = 0.0;
  while (n < 1e-12) {
    for (double& x : v) x = rng.normal();
    n = norm2(v);
  }
  for (double& x : v) x /= n;
  return v;
}

// Removes the component along unit vector `axis`; returns the residual norm.
double project_out(std::vector<double>& v, std::span<const double> axis) {
  const double along = dot(v, axis);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= along * axis[i];
  return norm2(v);
}

// Unit vector orthogonal to w_star, either isotropic in w_star^perp or a
// Gaussian combination of `basis`.
std::vector<double> orthogonal_direction(
    std::span<const double> w_star,
    const std::vector<std::vector<double>>& basis, Rng& rng) {
  const std::size_t dim = w_star.size();
  while (true) {
    std::vector<double> v(dim, 0.0);
    if (basis.empty()) {
      for (double& x : v) x = rng.normal();
    } else {
      for (const auto& b : basis) {
        const double g = rng.normal();
        for (std::size_t i = 0; i < dim; ++i) v[i] += g * b[i];
      }
    }
    const double n = project_out(v, w_star);
    if (n < 1e-9) continue;
    for (double& x : v) x /= n;
    return v;
  }
}

}  // namespace

PlantedDataset generate_margin_dataset(std::size_t n, std::size_t dim,
                                       double gamma, std::uint64_t seed,
                                       const GeneratorOptions& options) {
  if (n < 2) throw std::invalid_argument("generate: N must be >= 2");
  if (dim < 2) throw std::invalid_argument("generate: D must be >= 2");
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("generate: gamma must lie in (0, 1)");
  }
  if (options.orthogonal_rank &&
      (*options.orthogonal_rank == 0 || *options.orthogonal_rank >= dim)) {
    throw std::invalid_argument("generate: orthogonal rank must be in [1, D-1]");
  }

  Rng rng(seed);
  std::vector<double> w_star = unit_gaussian(dim, rng);

  // Orthonormal basis of the off-axis subspace (Gram-Schmidt).
  std::vector<std::vector<double>> basis;
  if (options.orthogonal_rank) {
    while (basis.size() < *options.orthogonal_rank) {
      std::vector<double> b = unit_gaussian(dim, rng);
      double r = project_out(b, w_star);
      for (const auto& prev : basis) r = project_out(b, prev);
      if (r < 1e-6) continue;
      for (double& x : b) x /= r;
      basis.push_back(std::move(b));
    }
  }

  std::vector<int> labels(n);
  for (int& y : labels) y = rng.bernoulli(0.5) ? 1 : -1;
  bool all_same = true;
  for (int y : labels) all_same = all_same && y == labels.front();
  if (all_same) labels.back() = -labels.front();

  std::vector<LabeledExample> examples;
  examples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<double> v = orthogonal_direction(w_star, basis, rng);
    const double s =
        options.pin_to_margin ? gamma : gamma + (1.0 - gamma) * rng.uniform();
    const double c = std::sqrt(1.0 - s * s);
    LabeledExample ex;
    ex.label = labels[i];
    ex.features.resize(dim);
    for (std::size_t d = 0; d < dim; ++d) {
      ex.features[d] = ex.label * s * w_star[d] + c * v[d];
    }
    examples.push_back(std::move(ex));
  }
  return PlantedDataset{TrainingSet(std::move(examples)), std::move(w_star),
                        gamma, seed, options};
}

double measure_empirical_margin(const TrainingSet& data,
                                std::span<const double> planted,
                                std::uint64_t seed, std::size_t probes) {
  double best = -std::numeric_limits<double>::infinity();
  if (!planted.empty()) best = margin(data, planted);

  const TrainReport streamed = train_online_streaming(data);
  if (norm2(streamed.model.weights) > 0.0) {
    best = std::max(best, margin(data, streamed.model));
  }

  Rng rng(seed);
  for (std::size_t p = 0; p < probes; ++p) {
    best = std::max(best, margin(data, unit_gaussian(data.dim(), rng)));
  }
  return best;
}

nlohmann::json planted_metadata(const PlantedDataset& planted) {
  nlohmann::json meta = {
      {"generator", "planted-margin"},
      {"seed", planted.seed},
      {"gamma", planted.gamma_planted},
      {"N", planted.data.size()},
      {"D", planted.data.dim()},
      {"w_star", planted.w_star},
      {"pin_to_margin", planted.options.pin_to_margin},
  };
  if (planted.options.orthogonal_rank) {
    meta["orthogonal_rank"] = *planted.options.orthogonal_rank;
  } else {
    meta["orthogonal_rank"] = nullptr;
  }
  return meta;
}

std::filesystem::path write_planted_dataset(const std::filesystem::path& path,
                                            const PlantedDataset& planted) {
  save_training_set(path, planted.data);
  std::filesystem::path sidecar = path;
  sidecar.replace_extension(".meta.json");
  std::ofstream out(sidecar);
  if (!out) throw std::runtime_error("cannot write " + sidecar.string());
  out << planted_metadata(planted).dump(2) << '\n';
  return sidecar;
}

}  // namespace qperc
