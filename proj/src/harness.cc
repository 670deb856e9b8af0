#include "qperc/harness.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "qperc/datagen.h"
#include "qperc/dataset_io.h"
#include "qperc/random.h"
#include "qperc/vspace.h"

namespace qperc {
namespace {

constexpr std::uint64_t kAlgorithmStream = 1;

struct AlgorithmName {
  Algorithm algorithm;
  std::string_view tag;
};

constexpr AlgorithmName kAlgorithmNames[] = {
    {Algorithm::kOnlineQuantum, "online-quantum"},
    {Algorithm::kOnlineClassical, "online-classical"},
    {Algorithm::kOnlineStreaming, "online-streaming"},
    {Algorithm::kVspaceQuantum, "vspace-quantum"},
    {Algorithm::kVspaceClassical, "vspace-classical"},
};

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = line.find(sep, start);
    if (at == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, at - start));
    start = at + 1;
  }
}

std::uint64_t parse_u64(std::string_view text) {
  const double v = parse_double(text);
  if (v < 0 || v != std::floor(v)) {
    throw std::invalid_argument("expected a nonnegative integer: '" +
                                std::string(text) + "'");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::string_view algorithm_tag(Algorithm algorithm) {
  for (const auto& [a, tag] : kAlgorithmNames) {
    if (a == algorithm) return tag;
  }
  throw std::invalid_argument("unknown algorithm");
}

Algorithm parse_algorithm(std::string_view tag) {
  for (const auto& [a, name] : kAlgorithmNames) {
    if (name == tag) return a;
  }
  throw std::invalid_argument("unknown algorithm tag '" + std::string(tag) +
                              "'");
}

std::string_view axis_tag(SweepAxis axis) {
  return axis == SweepAxis::kN ? "N" : "gamma";
}

SweepAxis parse_axis(std::string_view tag) {
  if (tag == "N") return SweepAxis::kN;
  if (tag == "gamma") return SweepAxis::kGamma;
  throw std::invalid_argument("unknown sweep axis '" + std::string(tag) + "'");
}

void SweepSpec::validate() const {
  if (axis_values.empty()) {
    throw std::invalid_argument("sweep: axis_values must be nonempty");
  }
  for (std::size_t i = 1; i < axis_values.size(); ++i) {
    if (!(axis_values[i] > axis_values[i - 1])) {
      throw std::invalid_argument("sweep: axis_values must strictly increase");
    }
  }
  if (fixed.trials == 0) throw std::invalid_argument("sweep: trials must be >= 1");
  if (axis == SweepAxis::kN) {
    for (double v : axis_values) {
      if (v < 2 || v != std::floor(v)) {
        throw std::invalid_argument("sweep: N values must be integers >= 2");
      }
    }
  } else {
    for (double v : axis_values) {
      if (!(v > 0.0 && v < 1.0)) {
        throw std::invalid_argument("sweep: gamma values must lie in (0, 1)");
      }
    }
  }
}

SweepSpec SweepSpec::from_json(const nlohmann::json& j) {
  try {
    SweepSpec spec;
    spec.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
    spec.axis = parse_axis(j.at("axis").get<std::string>());
    spec.axis_values = j.at("axis_values").get<std::vector<double>>();
    const nlohmann::json fixed =
        j.contains("fixed_params") ? j.at("fixed_params") : nlohmann::json::object();
    FixedParams& f = spec.fixed;
    f.n = fixed.value("N", f.n);
    f.dim = fixed.value("D", f.dim);
    f.gamma = fixed.value("gamma", f.gamma);
    f.epsilon = fixed.value("epsilon", f.epsilon);
    f.base = fixed.value("c", f.base);
    f.trials = fixed.value("trials", f.trials);
    f.base_seed = fixed.value("base_seed", f.base_seed);
    if (fixed.contains("k_override") && !fixed.at("k_override").is_null()) {
      f.k_override = fixed.at("k_override").get<std::size_t>();
    }
    spec.validate();
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("sweep spec: ") + e.what());
  }
}

nlohmann::json SweepSpec::to_json() const {
  nlohmann::json fixed_params = {
      {"N", fixed.n},         {"D", fixed.dim},
      {"gamma", fixed.gamma}, {"epsilon", fixed.epsilon},
      {"c", fixed.base},      {"trials", fixed.trials},
      {"base_seed", fixed.base_seed},
  };
  fixed_params["k_override"] =
      fixed.k_override ? nlohmann::json(*fixed.k_override) : nlohmann::json();
  return {{"algorithm", algorithm_tag(algorithm)},
          {"axis", axis_tag(axis)},
          {"axis_values", axis_values},
          {"fixed_params", fixed_params}};
}

std::uint64_t cell_seed(std::uint64_t base_seed, double axis_value,
                        std::uint64_t trial) {
  const auto bits = std::bit_cast<std::uint64_t>(axis_value);
  return base_seed ^ splitmix64(splitmix64(bits) ^ trial);
}

TrainReport run_algorithm(Algorithm algorithm, const TrainingSet& data,
                          const RunParams& params) {
  switch (algorithm) {
    case Algorithm::kOnlineQuantum:
    case Algorithm::kOnlineClassical: {
      OnlineTrainConfig config;
      config.epsilon = params.epsilon;
      config.gamma_bound = params.gamma;
      config.base = params.base;
      config.seed = params.seed;
      return algorithm == Algorithm::kOnlineQuantum
                 ? train_online_quantum(data, config)
                 : train_online_classical(data, config);
    }
    case Algorithm::kOnlineStreaming:
      return train_online_streaming(data, params.gamma);
    case Algorithm::kVspaceQuantum:
    case Algorithm::kVspaceClassical: {
      VSTrainConfig config;
      config.epsilon = params.epsilon;
      config.gamma_bound = params.gamma;
      config.base = params.base;
      config.seed = params.seed;
      config.k_override = params.k_override;
      return algorithm == Algorithm::kVspaceQuantum
                 ? train_version_space_quantum(data, config)
                 : train_version_space_classical(data, config);
    }
  }
  throw std::invalid_argument("unknown algorithm");
}

RunRecord run_single(Algorithm algorithm, const TrainingSet& data,
                     const RunParams& params) {
  const auto start = std::chrono::steady_clock::now();
  const TrainReport report = run_algorithm(algorithm, data, params);
  const auto stop = std::chrono::steady_clock::now();

  RunRecord r;
  r.algo = std::string(algorithm_tag(algorithm));
  r.axis = "none";
  r.seed = params.seed;
  r.n = data.size();
  r.dim = data.dim();
  r.gamma = params.gamma;
  r.epsilon = params.epsilon;
  r.c = params.base;
  r.updates = report.updates_made;
  r.converged = report.converged;
  r.q_queries = report.ledger.quantum_oracle_queries();
  r.c_queries = report.ledger.classical_oracle_queries();
  r.g_queries = report.ledger.composite_oracle_queries();
  r.wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

std::vector<RunRecord> run_sweep(const SweepSpec& spec, unsigned threads) {
  spec.validate();
  struct Cell {
    double axis_value;
    std::uint64_t trial;
  };
  std::vector<Cell> cells;
  for (double v : spec.axis_values) {
    for (std::uint64_t t = 0; t < spec.fixed.trials; ++t) cells.push_back({v, t});
  }
  std::vector<RunRecord> records(cells.size());

  auto run_cell = [&](std::size_t i) {
    const Cell& cell = cells[i];
    std::size_t n = spec.fixed.n;
    double gamma = spec.fixed.gamma;
    if (spec.axis == SweepAxis::kN) {
      n = static_cast<std::size_t>(cell.axis_value);
    } else {
      gamma = cell.axis_value;
    }
    const std::uint64_t seed =
        cell_seed(spec.fixed.base_seed, cell.axis_value, cell.trial);
    const PlantedDataset planted =
        generate_margin_dataset(n, spec.fixed.dim, gamma, seed);
    RunParams params;
    params.gamma = gamma;
    params.epsilon = spec.fixed.epsilon;
    params.base = spec.fixed.base;
    params.seed = mix_seed(seed, kAlgorithmStream);
    params.k_override = spec.fixed.k_override;
    RunRecord r = run_single(spec.algorithm, planted.data, params);
    r.axis = std::string(axis_tag(spec.axis));
    r.axis_value = cell.axis_value;
    r.trial = cell.trial;
    r.seed = seed;
    records[i] = std::move(r);
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, cells.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        run_cell(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

void write_records_csv(std::ostream& out, std::span<const RunRecord> records) {
  out << kRecordCsvHeader << '\n';
  for (const RunRecord& r : records) {
    out << r.algo << ',' << r.axis << ',' << format_double(r.axis_value) << ','
        << r.trial << ',' << r.seed << ',' << r.n << ',' << r.dim << ','
        << format_double(r.gamma) << ',' << format_double(r.epsilon) << ','
        << format_double(r.c) << ',' << r.updates << ','
        << (r.converged ? 1 : 0) << ',' << r.q_queries << ',' << r.c_queries
        << ',' << r.g_queries << ',' << format_double(r.wall_ms) << '\n';
  }
}

std::vector<RunRecord> read_records_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("records CSV: missing header");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kRecordCsvHeader) {
    throw std::invalid_argument("records CSV: unexpected header '" + line + "'");
  }
  std::vector<RunRecord> records;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 16) {
      throw std::invalid_argument("records CSV: expected 16 columns, got " +
                                  std::to_string(f.size()));
    }
    RunRecord r;
    r.algo = std::string(f[0]);
    r.axis = std::string(f[1]);
    r.axis_value = parse_double(f[2]);
    r.trial = parse_u64(f[3]);
    r.seed = std::stoull(std::string(f[4]));
    r.n = parse_u64(f[5]);
    r.dim = parse_u64(f[6]);
    r.gamma = parse_double(f[7]);
    r.epsilon = parse_double(f[8]);
    r.c = parse_double(f[9]);
    r.updates = parse_u64(f[10]);
    r.converged = parse_u64(f[11]) != 0;
    r.q_queries = std::stoull(std::string(f[12]));
    r.c_queries = std::stoull(std::string(f[13]));
    r.g_queries = std::stoull(std::string(f[14]));
    r.wall_ms = parse_double(f[15]);
    records.push_back(std::move(r));
  }
  return records;
}

nlohmann::json record_to_json(const RunRecord& r) {
  return {{"algo", r.algo},
          {"axis", r.axis},
          {"axis_value", r.axis_value},
          {"trial", r.trial},
          {"seed", r.seed},
          {"N", r.n},
          {"D", r.dim},
          {"gamma", r.gamma},
          {"epsilon", r.epsilon},
          {"c", r.c},
          {"updates", r.updates},
          {"converged", r.converged},
          {"q_queries", r.q_queries},
          {"c_queries", r.c_queries},
          {"g_queries", r.g_queries},
          {"wall_ms", r.wall_ms}};
}

double record_field(const RunRecord& r, std::string_view field) {
  if (field == "axis_value") return r.axis_value;
  if (field == "trial") return static_cast<double>(r.trial);
  if (field == "seed") return static_cast<double>(r.seed);
  if (field == "N") return static_cast<double>(r.n);
  if (field == "D") return static_cast<double>(r.dim);
  if (field == "gamma") return r.gamma;
  if (field == "epsilon") return r.epsilon;
  if (field == "c") return r.c;
  if (field == "updates") return static_cast<double>(r.updates);
  if (field == "converged") return r.converged ? 1.0 : 0.0;
  if (field == "q_queries") return static_cast<double>(r.q_queries);
  if (field == "c_queries") return static_cast<double>(r.c_queries);
  if (field == "g_queries") return static_cast<double>(r.g_queries);
  if (field == "wall_ms") return r.wall_ms;
  throw std::invalid_argument("unknown numeric column '" + std::string(field) +
                              "'");
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of empty set");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

ExponentFit fit_loglog(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("fit: size mismatch");
  if (xs.size() < 3) {
    throw std::invalid_argument("fit: need at least 3 distinct x values");
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
      throw std::invalid_argument("fit: x and y must be positive");
    }
    lx.push_back(std::log(xs[i]));
    ly.push_back(std::log(ys[i]));
    mx += lx.back();
    my += ly.back();
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit: x values are identical");
  ExponentFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

ExponentFit fit_exponent(std::span<const RunRecord> records,
                         std::string_view x_field, std::string_view y_field) {
  std::map<double, std::vector<double>> groups;
  for (const RunRecord& r : records) {
    groups[record_field(r, x_field)].push_back(record_field(r, y_field));
  }
  if (groups.size() < 3) {
    throw std::invalid_argument("fit: need at least 3 distinct x values");
  }
  std::vector<double> xs, ys;
  for (auto& [x, y] : groups) {
    xs.push_back(x);
    ys.push_back(median(std::move(y)));
  }
  return fit_loglog(xs, ys);
}

}  // namespace qperc
