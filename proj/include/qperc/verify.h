#ifndef QPERC_VERIFY_H_
#define QPERC_VERIFY_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qperc {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Marked mass of statevector_reference against sin^2((2m+1) asin(sqrt(k/N)))
// for 2 <= N <= max_items, 0 <= k <= N, 0 <= m <= max_iterations, and the
// unit-sum property of the state vector.
CheckResult check_grover_exactness(std::size_t max_items = 64,
                                   std::uint64_t max_iterations = 16,
                                   double tolerance = 1e-10);

// mean_success_probability >= 1/4 at M = ceil(1/sin(2 theta)) on the grid
// theta = 0.01 .. 1.5, and agreement with the direct average.
CheckResult check_averaged_bound(double tolerance = 1e-10);

// The a = 1/4 and a = 1/2 examples and the deterministic boost of a = 1/2.
CheckResult check_worked_examples();

// On `datasets` planted sets, every online trainer stays within
// ceil(1/gamma^2) updates, and every trainer's converged model separates
// the data.
CheckResult check_mistake_bounds(std::size_t datasets = 200,
                                 std::size_t num_items = 256,
                                 std::size_t dim = 8, double gamma = 0.2,
                                 double epsilon = 0.1,
                                 std::uint64_t base_seed = 4242);

std::vector<CheckResult> run_builtin_verification();

}  // namespace qperc

#endif  // QPERC_VERIFY_H_
