#ifndef QPERC_CORE_H_
#define QPERC_CORE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qperc {

// Absolute tolerance on the Euclidean norm of every training vector.
inline constexpr double kUnitNormTolerance = 1e-9;

struct LabeledExample {
  std::vector<double> features;
  int label = 1;  // -1 or +1

  std::size_t dim() const { return features.size(); }
};

// Ordered, validated collection of unit-norm labeled examples sharing one
// dimension. Immutable after construction.
class TrainingSet {
 public:
  // Throws std::invalid_argument when the set is empty, dimensions differ,
  // a label is not +/-1, or a feature vector is not unit norm.
  explicit TrainingSet(std::vector<LabeledExample> examples);

  std::size_t size() const { return examples_.size(); }
  std::size_t dim() const { return dim_; }

  const LabeledExample& operator[](std::size_t i) const {
    return examples_[i];
  }
  const std::vector<LabeledExample>& examples() const { return examples_; }

  auto begin() const { return examples_.begin(); }
  auto end() const { return examples_.end(); }

 private:
  std::vector<LabeledExample> examples_;
  std::size_t dim_ = 0;
};

// Linear separator through the origin. No bias term; append a constant
// feature to the data if one is needed.
struct PerceptronModel {
  std::vector<double> weights;

  static PerceptronModel zeros(std::size_t dim) {
    return PerceptronModel{std::vector<double>(dim, 0.0)};
  }
  std::size_t dim() const { return weights.size(); }
};

// Oracle-call counters. One ledger belongs to one run.
class QueryLedger {
 public:
  std::uint64_t quantum_oracle_queries() const { return quantum_; }
  std::uint64_t classical_oracle_queries() const { return classical_; }
  std::uint64_t composite_oracle_queries() const { return composite_; }

  void add_quantum(std::uint64_t n) { quantum_ += n; }
  void add_classical(std::uint64_t n) { classical_ += n; }
  void add_composite(std::uint64_t n) { composite_ += n; }

  QueryLedger& operator+=(const QueryLedger& other) {
    quantum_ += other.quantum_;
    classical_ += other.classical_;
    composite_ += other.composite_;
    return *this;
  }

  bool operator==(const QueryLedger&) const = default;

 private:
  std::uint64_t quantum_ = 0;
  std::uint64_t classical_ = 0;
  std::uint64_t composite_ = 0;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

// y * <w, phi>, the signed functional margin of one example.
double signed_score(const PerceptronModel& model, const LabeledExample& example);

// True iff y * <w, phi> <= 0. Ties count as mistakes.
bool misclassifies(const PerceptronModel& model, const LabeledExample& example);

// w + y * phi. The input model is left untouched.
PerceptronModel perceptron_update(const PerceptronModel& model,
                                  const LabeledExample& example);

// min_i y_i <w, phi_i> / ||w||. Throws on a zero weight vector.
double margin(const TrainingSet& data, std::span<const double> weights);
inline double margin(const TrainingSet& data, const PerceptronModel& model) {
  return margin(data, model.weights);
}

// ceil(x) after removing a tiny relative slack, so analytic counts that land
// a few ulps above an integer (1/0.2^2 = 25.000000000000004) round to it.
std::uint64_t ceil_count(double x);

}  // namespace qperc

#endif  // QPERC_CORE_H_
