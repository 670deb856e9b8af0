// qperc: experiment CLI for the quantum perceptron simulators.
//
//   qperc gen    --n 256 --dim 8 --gamma 0.2 --seed 1 --out data.csv
//   qperc train  --algo online-quantum --data data.csv --epsilon 0.1
//                --gamma 0.2 --c 1.5 --seed 7 [--k-override 32]
//   qperc sweep  --spec sweep.json --out records.csv
//   qperc fit    --in records.csv --x N --y q_queries
//   qperc verify
//
// Exit codes: 0 success, 2 invalid arguments, 3 verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qperc/datagen.h"
#include "qperc/dataset_io.h"
#include "qperc/harness.h"
#include "qperc/verify.h"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitVerifyFailed = 3;

int cmd_gen(std::size_t n, std::size_t dim, double gamma, std::uint64_t seed,
            bool pin, const std::string& out) {
  qperc::GeneratorOptions options;
  options.pin_to_margin = pin;
  const auto planted = qperc::generate_margin_dataset(n, dim, gamma, seed, options);
  const auto sidecar = qperc::write_planted_dataset(out, planted);
  std::cerr << "wrote " << out << " and " << sidecar.string() << "\n";
  return 0;
}

int cmd_train(const std::string& algo, const std::string& data_path,
              double epsilon, double gamma, double c, std::uint64_t seed,
              std::optional<std::size_t> k_override) {
  const qperc::Algorithm algorithm = qperc::parse_algorithm(algo);
  const qperc::TrainingSet data = qperc::load_training_set(data_path);
  qperc::RunParams params;
  params.gamma = gamma;
  params.epsilon = epsilon;
  params.base = c;
  params.seed = seed;
  params.k_override = k_override;
  const qperc::RunRecord record = qperc::run_single(algorithm, data, params);
  std::cout << qperc::record_to_json(record).dump() << "\n";
  return 0;
}

int cmd_sweep(const std::string& spec_path, const std::string& out_path,
              unsigned threads) {
  std::ifstream in(spec_path);
  if (!in) throw std::invalid_argument("cannot open " + spec_path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(spec_path + ": " + e.what());
  }
  const auto spec = qperc::SweepSpec::from_json(j);
  const auto records = qperc::run_sweep(spec, threads);
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  qperc::write_records_csv(out, records);
  std::cerr << "wrote " << records.size() << " records to " << out_path << "\n";
  return 0;
}

int cmd_fit(const std::string& in_path, const std::string& x,
            const std::string& y) {
  std::ifstream in(in_path);
  if (!in) throw std::invalid_argument("cannot open " + in_path);
  const auto records = qperc::read_records_csv(in);
  const auto fit = qperc::fit_exponent(records, x, y);
  std::cout << nlohmann::json{{"slope", fit.slope},
                              {"intercept", fit.intercept},
                              {"r_squared", fit.r_squared}}
                   .dump()
            << "\n";
  return 0;
}

int cmd_verify() {
  bool ok = true;
  for (const auto& check : qperc::run_builtin_verification()) {
    std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.name << ": "
              << check.detail << "\n";
    ok = ok && check.passed;
  }
  return ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum perceptron training simulators and experiments"};
  app.require_subcommand(1);

  std::size_t n = 256, dim = 8;
  double gamma = 0.2, epsilon = 0.1, c = 1.5;
  std::uint64_t seed = 0;
  bool pin = false;
  std::string out, algo, data_path, spec_path, in_path, x_col, y_col;
  std::optional<std::size_t> k_override;
  unsigned threads = 0;

  auto* gen = app.add_subcommand("gen", "Write a planted-margin dataset");
  gen->add_option("--n", n, "Number of examples")->required();
  gen->add_option("--dim", dim, "Feature dimension")->required();
  gen->add_option("--gamma", gamma, "Planted margin")->required();
  gen->add_option("--seed", seed, "Generator seed")->required();
  gen->add_option("--out", out, "Output path (.csv or .json)")->required();
  gen->add_flag("--pin-to-margin", pin, "Place every example on the margin");

  auto* train = app.add_subcommand("train", "Run one trainer on a dataset");
  train->add_option("--algo", algo, "online-quantum | online-classical | "
                    "online-streaming | vspace-quantum | vspace-classical")
      ->required();
  train->add_option("--data", data_path, "Dataset (.csv or .json)")->required();
  train->add_option("--epsilon", epsilon, "Total failure probability");
  train->add_option("--gamma", gamma, "Margin lower bound");
  train->add_option("--c", c, "Exponential search base in (1, 2)");
  train->add_option("--seed", seed, "Run seed");
  train->add_option("--k-override", k_override, "Version-space ensemble size");

  auto* sweep = app.add_subcommand("sweep", "Run a sweep spec to CSV");
  sweep->add_option("--spec", spec_path, "Sweep spec JSON")->required();
  sweep->add_option("--out", out, "Output CSV")->required();
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* fit = app.add_subcommand("fit", "Log-log exponent fit of a CSV");
  fit->add_option("--in", in_path, "Records CSV")->required();
  fit->add_option("--x", x_col, "x column")->required();
  fit->add_option("--y", y_col, "y column")->required();

  app.add_subcommand("verify", "Run the built-in property suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*gen) return cmd_gen(n, dim, gamma, seed, pin, out);
    if (*train) {
      return cmd_train(algo, data_path, epsilon, gamma, c, seed, k_override);
    }
    if (*sweep) return cmd_sweep(spec_path, out, threads);
    if (*fit) return cmd_fit(in_path, x_col, y_col);
    return cmd_verify();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
