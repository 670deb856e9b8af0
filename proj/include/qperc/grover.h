#ifndef QPERC_GROVER_H_
#define QPERC_GROVER_H_

// Outcome-level simulation of amplitude amplification from a uniform start.
//
// From a uniform superposition over N items, the reflections
// (2 psi psi^T - 1)(1 - 2P) keep the state inside span(psi, P psi), and
// amplitudes stay uniform within the marked and unmarked subsets. The
// measurement distribution after m iterations is therefore fully described by
// the marked mass sin^2((2m+1) theta_a): an outcome is a uniform marked index
// with that probability, else a uniform unmarked index. run_grover samples
// exactly that distribution in O(log N); statevector_reference applies the
// reflections literally and serves as the test oracle.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qperc/core.h"
#include "qperc/random.h"

namespace qperc {

inline constexpr double kDefaultSearchBase = 1.5;
inline constexpr std::size_t kMaxStatevectorItems = std::size_t{1} << 16;

// Search problem over items {0, ..., N-1} with a fixed marked subset.
class GroverInstance {
 public:
  // Evaluates `marked` once for every index and caches the marked set.
  GroverInstance(std::size_t num_items,
                 const std::function<bool(std::size_t)>& marked);

  // `marked` need not be sorted; duplicates and out-of-range indices throw.
  static GroverInstance from_marked_indices(std::size_t num_items,
                                            std::vector<std::size_t> marked);

  std::size_t num_items() const { return num_items_; }
  std::size_t num_marked() const { return marked_.size(); }
  std::span<const std::size_t> marked_indices() const { return marked_; }

  bool is_marked(std::size_t index) const;

  // The r-th unmarked index in increasing order, r < N - k.
  std::size_t nth_unmarked(std::size_t r) const;

 private:
  GroverInstance() = default;

  std::size_t num_items_ = 0;
  std::vector<std::size_t> marked_;  // sorted
};

struct GroverAngle {
  double radians = 0.0;  // in [0, pi/2]
};

struct MeasurementOutcome {
  std::size_t index = 0;
  bool was_marked = false;
  std::uint64_t iterations_used = 0;
};

// Ledger charges for one Grover iteration and one classical check. The
// defaults are the online setting (one F_w per iteration, one f_w per check).
struct QueryCost {
  std::uint64_t quantum_per_iteration = 1;
  std::uint64_t composite_per_iteration = 0;
  std::uint64_t classical_per_verification = 1;
};

// asin(sqrt(k/N)). Throws std::invalid_argument if k > N or N == 0.
GroverAngle grover_angle(std::size_t num_marked, std::size_t num_items);

// sin^2((2m+1) theta).
double success_probability(GroverAngle theta, std::uint64_t iterations);

// Average of success_probability over m in {0, ..., M-1}. Uses the closed
// form (1/2)(1 - sin(4 M theta) / (2 M sin(2 theta))) away from the 0/0
// points theta in {0, pi/2}, where the direct average is returned instead.
double mean_success_probability(GroverAngle theta, std::uint64_t range);

// One simulated search: m iterations then a measurement. Charges
// m * cost.quantum_per_iteration and m * cost.composite_per_iteration.
MeasurementOutcome run_grover(const GroverInstance& instance,
                              std::uint64_t iterations, Rng& rng,
                              QueryLedger& ledger, const QueryCost& cost = {});

// Reflections applied to a real state vector: m times a <- 2 psi <psi, a> - a
// after flipping the sign of marked entries, starting from a = psi. `initial`
// must be unit norm. Returns squared amplitudes.
std::vector<double> amplify_statevector(std::span<const double> initial,
                                        const std::vector<bool>& marked,
                                        std::uint64_t iterations);

// Literal state-vector evolution from the uniform state. Throws
// std::length_error when N exceeds kMaxStatevectorItems.
std::vector<double> statevector_reference(const GroverInstance& instance,
                                          std::uint64_t iterations);

// Sum of `probabilities` over the instance's marked indices.
double marked_mass(const GroverInstance& instance,
                   std::span<const double> probabilities);

// Lowers a known success probability a to sin^2(pi / (2(2j+1))) by
// conjoining an independent Bernoulli(q) event, so that j iterations succeed
// with certainty.
struct BoostPlan {
  std::uint64_t iterations = 1;  // j >= 1, smallest feasible
  double bernoulli_q = 1.0;      // in (0, 1]
};

BoostPlan deterministic_boost(double success_probability_a);

// Marked mass after plan.iterations on the augmented space
// {items} x {ancilla 0, ancilla 1}: amplitudes sqrt(q/N) on ancilla 0,
// sqrt((1-q)/N) on ancilla 1, good states are (marked item, ancilla 0).
// Computed with amplify_statevector.
double boosted_statevector_success(const GroverInstance& instance,
                                   const BoostPlan& plan);

// Inner-loop depth J = ceil(log_c(1 / sin(2 asin(1/sqrt(N))))), at least 1.
std::uint64_t search_depth(std::size_t num_items, double base);

// ceil(log_{3/4}(delta)), at least 1. Throws unless delta in (0, 1).
std::uint64_t failure_rounds_for(double delta);

// Exponential search with randomized iteration counts. For each of
// `failure_rounds` rounds and j = 1..search_depth(N, c): draw m uniformly
// from {0, ..., ceil(c^j)}, run_grover, then classically verify the measured
// index. Returns the first verified index. `verify` must agree with the
// instance's marking. Throws std::invalid_argument unless 1 < c < 2.
std::optional<std::size_t> exponential_search(
    const GroverInstance& instance, double base, std::uint64_t failure_rounds,
    Rng& rng, QueryLedger& ledger,
    const std::function<bool(std::size_t)>& verify,
    const QueryCost& cost = {});

// Upper bound on the quantum queries one exponential_search may charge:
// failure_rounds * sum_{j=1}^{J} ceil(c^j) * cost.quantum_per_iteration.
std::uint64_t exponential_search_query_cap(std::size_t num_items, double base,
                                           std::uint64_t failure_rounds,
                                           const QueryCost& cost = {});

}  // namespace qperc

#endif  // QPERC_GROVER_H_
