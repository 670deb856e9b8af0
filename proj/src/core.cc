#include "qperc/core.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qperc {
namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) +
                                ")");
  }
}

}  // namespace

TrainingSet::TrainingSet(std::vector<LabeledExample> examples)
    : examples_(std::move(examples)) {
  if (examples_.empty()) {
    throw std::invalid_argument("TrainingSet: at least one example required");
  }
  dim_ = examples_.front().dim();
  if (dim_ == 0) throw std::invalid_argument("TrainingSet: zero dimension");
  for (std::size_t i = 0; i < examples_.size(); ++i) {
    const LabeledExample& ex = examples_[i];
    if (ex.dim() != dim_) {
      throw std::invalid_argument("TrainingSet: example " + std::to_string(i) +
                                  " has dimension " + std::to_string(ex.dim()) +
                                  ", expected " + std::to_string(dim_));
    }
    if (ex.label != 1 && ex.label != -1) {
      throw std::invalid_argument("TrainingSet: example " + std::to_string(i) +
                                  " has label " + std::to_string(ex.label));
    }
    const double n = norm2(ex.features);
    if (!(std::abs(n - 1.0) <= kUnitNormTolerance)) {
      throw std::invalid_argument("TrainingSet: example " + std::to_string(i) +
                                  " is not unit norm (" + std::to_string(n) +
                                  ")");
    }
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  require_same_dim(a.size(), b.size(), "dot");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double signed_score(const PerceptronModel& model,
                    const LabeledExample& example) {
  require_same_dim(model.dim(), example.dim(), "signed_score");
  return example.label * dot(model.weights, example.features);
}

bool misclassifies(const PerceptronModel& model,
                   const LabeledExample& example) {
  return signed_score(model, example) <= 0.0;
}

PerceptronModel perceptron_update(const PerceptronModel& model,
                                  const LabeledExample& example) {
  require_same_dim(model.dim(), example.dim(), "perceptron_update");
  PerceptronModel next = model;
  for (std::size_t i = 0; i < next.weights.size(); ++i) {
    next.weights[i] += example.label * example.features[i];
  }
  return next;
}

double margin(const TrainingSet& data, std::span<const double> weights) {
  require_same_dim(weights.size(), data.dim(), "margin");
  const double w_norm = norm2(weights);
  if (w_norm == 0.0) throw std::invalid_argument("margin: zero weight vector");
  double worst = std::numeric_limits<double>::infinity();
  for (const LabeledExample& ex : data) {
    worst = std::min(worst, ex.label * dot(weights, ex.features));
  }
  return worst / w_norm;
}

std::uint64_t ceil_count(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument("ceil_count: value must be finite and >= 0");
  }
  const double slack = 1e-9 * std::max(1.0, x);
  return static_cast<std::uint64_t>(std::ceil(x - slack));
}

}  // namespace qperc
