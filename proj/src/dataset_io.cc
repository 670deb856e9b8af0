#include "qperc/dataset_io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qperc {
namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(line.substr(start));
      return cells;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, end);
}

double parse_double(std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

void write_csv(std::ostream& out, const TrainingSet& data) {
  for (std::size_t d = 0; d < data.dim(); ++d) out << "f_" << d + 1 << ',';
  out << "label\n";
  for (const LabeledExample& ex : data) {
    for (double f : ex.features) out << format_double(f) << ',';
    out << ex.label << '\n';
  }
}

TrainingSet read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("dataset CSV: missing header row");
  }
  const auto header = split_commas(trim(line));
  if (header.size() < 2 || trim(header.back()) != "label") {
    throw std::invalid_argument("dataset CSV: header must end with 'label'");
  }
  const std::size_t dim = header.size() - 1;
  std::vector<LabeledExample> examples;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const auto cells = split_commas(trim(line));
    if (cells.size() != dim + 1) {
      throw std::invalid_argument("dataset CSV: row " + std::to_string(row) +
                                  " has " + std::to_string(cells.size()) +
                                  " columns");
    }
    LabeledExample ex;
    ex.features.reserve(dim);
    for (std::size_t d = 0; d < dim; ++d) {
      ex.features.push_back(parse_double(cells[d]));
    }
    const double label = parse_double(cells[dim]);
    ex.label = static_cast<int>(label);
    if (ex.label != label) {
      throw std::invalid_argument("dataset CSV: non-integer label in row " +
                                  std::to_string(row));
    }
    examples.push_back(std::move(ex));
  }
  return TrainingSet(std::move(examples));
}

nlohmann::json to_json(const TrainingSet& data) {
  nlohmann::json examples = nlohmann::json::array();
  for (const LabeledExample& ex : data) {
    examples.push_back({{"phi", ex.features}, {"y", ex.label}});
  }
  return {{"dim", data.dim()}, {"examples", std::move(examples)}};
}

TrainingSet training_set_from_json(const nlohmann::json& j) {
  try {
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<LabeledExample> examples;
    for (const auto& item : j.at("examples")) {
      LabeledExample ex;
      ex.features = item.at("phi").get<std::vector<double>>();
      ex.label = item.at("y").get<int>();
      if (ex.dim() != dim) {
        throw std::invalid_argument("dataset JSON: example dimension " +
                                    std::to_string(ex.dim()) +
                                    " != dim " + std::to_string(dim));
      }
      examples.push_back(std::move(ex));
    }
    return TrainingSet(std::move(examples));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("dataset JSON: ") + e.what());
  }
}

TrainingSet load_training_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  if (path.extension() == ".json") {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(path.string() + ": " + e.what());
    }
    return training_set_from_json(j);
  }
  return read_csv(in);
}

void save_training_set(const std::filesystem::path& path,
                       const TrainingSet& data) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  if (path.extension() == ".json") {
    out << to_json(data).dump(2) << '\n';
  } else {
    write_csv(out, data);
  }
}

}  // namespace qperc
