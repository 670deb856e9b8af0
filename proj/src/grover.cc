#include "qperc/grover.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qperc {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

std::uint64_t iteration_range_top(double base, std::uint64_t j) {
  return static_cast<std::uint64_t>(
      std::ceil(std::pow(base, static_cast<double>(j))));
}

void require_base(double base) {
  if (!(base > 1.0 && base < 2.0)) {
    throw std::invalid_argument("search base c must lie in (1, 2), got " +
                                std::to_string(base));
  }
}

}  // namespace

GroverInstance::GroverInstance(std::size_t num_items,
                               const std::function<bool(std::size_t)>& marked)
    : num_items_(num_items) {
  if (num_items == 0) throw std::invalid_argument("GroverInstance: N == 0");
  for (std::size_t i = 0; i < num_items; ++i) {
    if (marked(i)) marked_.push_back(i);
  }
}

GroverInstance GroverInstance::from_marked_indices(
    std::size_t num_items, std::vector<std::size_t> marked) {
  if (num_items == 0) throw std::invalid_argument("GroverInstance: N == 0");
  std::sort(marked.begin(), marked.end());
  if (std::adjacent_find(marked.begin(), marked.end()) != marked.end()) {
    throw std::invalid_argument("GroverInstance: duplicate marked index");
  }
  if (!marked.empty() && marked.back() >= num_items) {
    throw std::invalid_argument("GroverInstance: marked index out of range");
  }
  GroverInstance instance;
  instance.num_items_ = num_items;
  instance.marked_ = std::move(marked);
  return instance;
}

bool GroverInstance::is_marked(std::size_t index) const {
  return std::binary_search(marked_.begin(), marked_.end(), index);
}

std::size_t GroverInstance::nth_unmarked(std::size_t r) const {
  if (r >= num_items_ - marked_.size()) {
    throw std::out_of_range("nth_unmarked: rank out of range");
  }
  // marked_[i] - i counts unmarked indices below marked_[i]; it is
  // nondecreasing, so the number of marked entries preceding the answer is
  // the length of the prefix where it is <= r.
  std::size_t lo = 0, hi = marked_.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (marked_[mid] - mid <= r) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return r + lo;
}

GroverAngle grover_angle(std::size_t num_marked, std::size_t num_items) {
  if (num_items == 0) throw std::invalid_argument("grover_angle: N == 0");
  if (num_marked > num_items) {
    throw std::invalid_argument("grover_angle: k > N");
  }
  if (num_marked == num_items) return {kHalfPi};
  return {std::asin(std::sqrt(static_cast<double>(num_marked) /
                              static_cast<double>(num_items)))};
}

double success_probability(GroverAngle theta, std::uint64_t iterations) {
  const double s =
      std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta.radians);
  return s * s;
}

double mean_success_probability(GroverAngle theta, std::uint64_t range) {
  if (range == 0) {
    throw std::invalid_argument("mean_success_probability: M must be >= 1");
  }
  const double m = static_cast<double>(range);
  const double s2 = std::sin(2.0 * theta.radians);
  if (std::abs(s2) > 1e-8) {
    return 0.5 * (1.0 - std::sin(4.0 * m * theta.radians) / (2.0 * m * s2));
  }
  double sum = 0.0;
  for (std::uint64_t j = 0; j < range; ++j) {
    sum += success_probability(theta, j);
  }
  return sum / m;
}

MeasurementOutcome run_grover(const GroverInstance& instance,
                              std::uint64_t iterations, Rng& rng,
                              QueryLedger& ledger, const QueryCost& cost) {
  ledger.add_quantum(iterations * cost.quantum_per_iteration);
  ledger.add_composite(iterations * cost.composite_per_iteration);

  const std::size_t n = instance.num_items();
  const std::size_t k = instance.num_marked();
  bool hit;
  if (k == 0) {
    hit = false;
  } else if (k == n) {
    hit = true;
  } else {
    hit = rng.bernoulli(
        success_probability(grover_angle(k, n), iterations));
  }

  MeasurementOutcome outcome;
  outcome.iterations_used = iterations;
  outcome.was_marked = hit;
  if (hit) {
    outcome.index = instance.marked_indices()[rng.uniform_int(0, k - 1)];
  } else {
    outcome.index = instance.nth_unmarked(rng.uniform_int(0, n - k - 1));
  }
  return outcome;
}

std::vector<double> amplify_statevector(std::span<const double> initial,
                                        const std::vector<bool>& marked,
                                        std::uint64_t iterations) {
  if (initial.size() != marked.size()) {
    throw std::invalid_argument("amplify_statevector: size mismatch");
  }
  if (std::abs(norm2(initial) - 1.0) > 1e-12) {
    throw std::invalid_argument("amplify_statevector: initial state not unit");
  }
  std::vector<double> amp(initial.begin(), initial.end());
  for (std::uint64_t it = 0; it < iterations; ++it) {
    // 1 - 2P
    for (std::size_t i = 0; i < amp.size(); ++i) {
      if (marked[i]) amp[i] = -amp[i];
    }
    // 2 psi psi^T - 1
    const double overlap = dot(initial, amp);
    for (std::size_t i = 0; i < amp.size(); ++i) {
      amp[i] = 2.0 * overlap * initial[i] - amp[i];
    }
  }
  for (double& a : amp) a *= a;
  return amp;
}

std::vector<double> statevector_reference(const GroverInstance& instance,
                                          std::uint64_t iterations) {
  const std::size_t n = instance.num_items();
  if (n > kMaxStatevectorItems) {
    throw std::length_error("statevector_reference: N = " + std::to_string(n) +
                            " exceeds capacity " +
                            std::to_string(kMaxStatevectorItems));
  }
  const std::vector<double> psi(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<bool> marked(n, false);
  for (std::size_t i : instance.marked_indices()) marked[i] = true;
  return amplify_statevector(psi, marked, iterations);
}

double marked_mass(const GroverInstance& instance,
                   std::span<const double> probabilities) {
  double mass = 0.0;
  for (std::size_t i : instance.marked_indices()) mass += probabilities[i];
  return mass;
}

BoostPlan deterministic_boost(double a) {
  if (!(a > 0.0 && a <= 1.0)) {
    throw std::invalid_argument("deterministic_boost: a must lie in (0, 1]");
  }
  constexpr double kTol = 1e-12;
  for (std::uint64_t j = 1;; ++j) {
    const double s = std::sin(std::numbers::pi /
                              (2.0 * (2.0 * static_cast<double>(j) + 1.0)));
    const double target = s * s;
    if (target <= a * (1.0 + kTol)) {
      return BoostPlan{j, std::min(1.0, target / a)};
    }
  }
}

double boosted_statevector_success(const GroverInstance& instance,
                                   const BoostPlan& plan) {
  const std::size_t n = instance.num_items();
  if (2 * n > kMaxStatevectorItems) {
    throw std::length_error("boosted_statevector_success: N too large");
  }
  const double q = plan.bernoulli_q;
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  // Layout: entry 2i is (item i, ancilla 0), 2i+1 is (item i, ancilla 1).
  std::vector<double> psi(2 * n);
  std::vector<bool> good(2 * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    psi[2 * i] = inv_sqrt_n * std::sqrt(q);
    psi[2 * i + 1] = inv_sqrt_n * std::sqrt(1.0 - q);
  }
  for (std::size_t i : instance.marked_indices()) good[2 * i] = true;
  const auto probs = amplify_statevector(psi, good, plan.iterations);
  double mass = 0.0;
  for (std::size_t i = 0; i < good.size(); ++i) {
    if (good[i]) mass += probs[i];
  }
  return mass;
}

std::uint64_t search_depth(std::size_t num_items, double base) {
  require_base(base);
  if (num_items == 0) throw std::invalid_argument("search_depth: N == 0");
  if (num_items == 1) return 1;
  const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(num_items)));
  const double m0 = 1.0 / std::sin(2.0 * theta);
  return std::max<std::uint64_t>(1, ceil_count(std::log(m0) / std::log(base)));
}

std::uint64_t failure_rounds_for(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("failure probability must lie in (0, 1)");
  }
  return std::max<std::uint64_t>(1,
                                 ceil_count(std::log(delta) / std::log(0.75)));
}

std::optional<std::size_t> exponential_search(
    const GroverInstance& instance, double base, std::uint64_t failure_rounds,
    Rng& rng, QueryLedger& ledger,
    const std::function<bool(std::size_t)>& verify, const QueryCost& cost) {
  const std::uint64_t depth = search_depth(instance.num_items(), base);
  for (std::uint64_t round = 0; round < failure_rounds; ++round) {
    for (std::uint64_t j = 1; j <= depth; ++j) {
      const std::uint64_t m = rng.uniform_int(0, iteration_range_top(base, j));
      const MeasurementOutcome outcome =
          run_grover(instance, m, rng, ledger, cost);
      ledger.add_classical(cost.classical_per_verification);
      if (verify(outcome.index)) return outcome.index;
    }
  }
  return std::nullopt;
}

std::uint64_t exponential_search_query_cap(std::size_t num_items, double base,
                                           std::uint64_t failure_rounds,
                                           const QueryCost& cost) {
  const std::uint64_t depth = search_depth(num_items, base);
  std::uint64_t per_round = 0;
  for (std::uint64_t j = 1; j <= depth; ++j) {
    per_round += iteration_range_top(base, j);
  }
  return failure_rounds * per_round * cost.quantum_per_iteration;
}

}  // namespace qperc
