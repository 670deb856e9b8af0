#include "qperc/verify.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qperc/datagen.h"
#include "qperc/grover.h"
#include "qperc/online.h"
#include "qperc/random.h"
#include "qperc/vspace.h"

namespace qperc {
namespace {

// k distinct indices out of N by partial Fisher-Yates.
std::vector<std::size_t> random_subset(std::size_t n, std::size_t k,
                                       std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(idx[i], idx[rng.uniform_int(i, n - 1)]);
  }
  idx.resize(k);
  return idx;
}

}  // namespace

CheckResult check_grover_exactness(std::size_t max_items,
                                   std::uint64_t max_iterations,
                                   double tolerance) {
  CheckResult result{"grover-exactness", true, ""};
  double worst = 0.0;
  std::size_t cases = 0;
  for (std::size_t n = 2; n <= max_items; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const GroverInstance instance = GroverInstance::from_marked_indices(
          n, random_subset(n, k, n * 1000 + k));
      const double theta = std::asin(std::sqrt(static_cast<double>(k) / n));
      for (std::uint64_t m = 0; m <= max_iterations; ++m) {
        const auto probs = statevector_reference(instance, m);
        const double s = std::sin((2.0 * m + 1.0) * theta);
        const double err = std::abs(marked_mass(instance, probs) - s * s);
        const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
        worst = std::max({worst, err, std::abs(total - 1.0)});
        ++cases;
        if (err > tolerance || std::abs(total - 1.0) > tolerance) {
          if (result.passed) {
            std::ostringstream os;
            os << "first failure at N=" << n << " k=" << k << " m=" << m
               << " err=" << err << "; ";
            result.detail += os.str();
          }
          result.passed = false;
        }
      }
    }
  }
  std::ostringstream os;
  os << cases << " cases, max abs error " << worst;
  result.detail += os.str();
  return result;
}

CheckResult check_averaged_bound(double tolerance) {
  CheckResult result{"averaged-probability-bound", true, ""};
  double min_value = 1.0, worst = 0.0;
  for (int step = 1; step <= 150; ++step) {
    const double theta = 0.01 * step;
    const auto range = static_cast<std::uint64_t>(
        std::ceil(1.0 / std::sin(2.0 * theta)));
    const double closed = mean_success_probability({theta}, range);
    double direct = 0.0;
    for (std::uint64_t j = 0; j < range; ++j) {
      const double s = std::sin((2.0 * j + 1.0) * theta);
      direct += s * s;
    }
    direct /= static_cast<double>(range);
    min_value = std::min(min_value, closed);
    worst = std::max(worst, std::abs(closed - direct));
    if (closed < 0.25 || std::abs(closed - direct) > tolerance) {
      result.passed = false;
    }
  }
  std::ostringstream os;
  os << "min average " << min_value << ", max |closed - direct| " << worst;
  result.detail = os.str();
  return result;
}

CheckResult check_worked_examples() {
  CheckResult result{"worked-examples", true, ""};
  std::ostringstream os;
  const double p_quarter = success_probability(grover_angle(1, 4), 1);
  os << "p(a=1/4, j=1)=" << p_quarter;
  if (p_quarter != 1.0) result.passed = false;

  double worst_half = 0.0;
  for (std::uint64_t j = 0; j <= 20; ++j) {
    worst_half = std::max(
        worst_half, std::abs(success_probability(grover_angle(1, 2), j) - 0.5));
  }
  os << ", max |p(a=1/2, j<=20) - 1/2|=" << worst_half;
  if (worst_half > 1e-12) result.passed = false;

  const BoostPlan plan = deterministic_boost(0.5);
  os << ", boost(0.5)=(" << plan.iterations << ", " << plan.bernoulli_q << ")";
  if (plan.iterations != 1 || std::abs(plan.bernoulli_q - 0.5) > 1e-12) {
    result.passed = false;
  }
  result.detail = os.str();
  return result;
}

CheckResult check_mistake_bounds(std::size_t datasets, std::size_t num_items,
                                 std::size_t dim, double gamma, double epsilon,
                                 std::uint64_t base_seed) {
  CheckResult result{"mistake-bounds", true, ""};
  OnlineTrainConfig online;
  online.epsilon = epsilon;
  online.gamma_bound = gamma;
  VSTrainConfig vs;
  vs.epsilon = epsilon;
  vs.gamma_bound = gamma;
  const std::uint64_t cap = online.update_cap();

  std::uint64_t max_updates[3] = {0, 0, 0};
  std::size_t converged_runs = 0, bad = 0;
  auto check = [&](const TrainReport& report, const PlantedDataset& planted) {
    if (report.converged) {
      ++converged_runs;
      if (!in_version_space(report.model.weights, planted.data)) ++bad;
    }
  };
  for (std::size_t i = 0; i < datasets; ++i) {
    const std::uint64_t seed = mix_seed(base_seed, i);
    const PlantedDataset planted =
        generate_margin_dataset(num_items, dim, gamma, seed);
    online.seed = mix_seed(seed, 1);
    vs.seed = mix_seed(seed, 2);
    const TrainReport reports[3] = {
        train_online_quantum(planted.data, online),
        train_online_classical(planted.data, online),
        train_online_streaming(planted.data, gamma)};
    for (int t = 0; t < 3; ++t) {
      max_updates[t] = std::max(max_updates[t], reports[t].updates_made);
      check(reports[t], planted);
    }
    check(train_version_space_quantum(planted.data, vs), planted);
    check(train_version_space_classical(planted.data, vs), planted);
  }
  for (std::uint64_t u : max_updates) {
    if (u > cap) result.passed = false;
  }
  if (bad > 0) result.passed = false;
  std::ostringstream os;
  os << datasets << " datasets; max updates quantum/classical/streaming = "
     << max_updates[0] << "/" << max_updates[1] << "/" << max_updates[2]
     << " (cap " << cap << "); converged runs " << converged_runs
     << ", non-separating converged models " << bad;
  result.detail = os.str();
  return result;
}

std::vector<CheckResult> run_builtin_verification() {
  return {check_grover_exactness(), check_averaged_bound(),
          check_worked_examples(), check_mistake_bounds()};
}

}  // namespace qperc
