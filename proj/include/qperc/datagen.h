#ifndef QPERC_DATAGEN_H_
#define QPERC_DATAGEN_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"
#include "qperc/core.h"

namespace qperc {

struct GeneratorOptions {
  // Every example sits exactly on the margin (s = gamma).
  bool pin_to_margin = false;
  // Restrict the off-axis directions v to a random subspace of w*^perp of
  // this dimension (1 .. D-1). Unset: v is uniform on the sphere of w*^perp.
  std::optional<std::size_t> orthogonal_rank;
};

struct PlantedDataset {
  TrainingSet data;
  std::vector<double> w_star;  // unit norm
  double gamma_planted = 0.0;
  std::uint64_t seed = 0;
  GeneratorOptions options;
};

// Draws w* uniformly on the unit sphere; for each example a label y, a unit
// direction v orthogonal to w* and s ~ U[gamma, 1], and emits
// phi = y s w* + sqrt(1 - s^2) v, so y <w*, phi> = s >= gamma.
// When N >= 2 both labels are present. Throws std::invalid_argument unless
// N >= 2, D >= 2 and 0 < gamma < 1.
PlantedDataset generate_margin_dataset(std::size_t n, std::size_t dim,
                                       double gamma, std::uint64_t seed,
                                       const GeneratorOptions& options = {});

inline constexpr std::size_t kMarginProbes = 10000;

// Lower-bound estimate of the maximum margin: the best of the planted
// separator (if given), the normalized streaming perceptron solution and
// `probes` random unit directions.
double measure_empirical_margin(const TrainingSet& data,
                                std::span<const double> planted = {},
                                std::uint64_t seed = 0,
                                std::size_t probes = kMarginProbes);

// Generator parameters and w*, stored next to the dataset file.
nlohmann::json planted_metadata(const PlantedDataset& planted);

// Writes `path` (CSV or JSON by extension) plus `<stem>.meta.json` beside it.
// Returns the sidecar path.
std::filesystem::path write_planted_dataset(const std::filesystem::path& path,
                                            const PlantedDataset& planted);

}  // namespace qperc

#endif  // QPERC_DATAGEN_H_
