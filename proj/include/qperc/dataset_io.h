#ifndef QPERC_DATASET_IO_H_
#define QPERC_DATASET_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "qperc/core.h"

namespace qperc {

// CSV layout: header "f_1,...,f_D,label", then one row per example.
// Doubles are written in shortest round-trip form.
void write_csv(std::ostream& out, const TrainingSet& data);
TrainingSet read_csv(std::istream& in);

// {"dim": D, "examples": [{"phi": [...], "y": +/-1}, ...]}
nlohmann::json to_json(const TrainingSet& data);
TrainingSet training_set_from_json(const nlohmann::json& j);

// Dispatches on extension: ".json" reads the JSON form, anything else CSV.
TrainingSet load_training_set(const std::filesystem::path& path);
void save_training_set(const std::filesystem::path& path,
                       const TrainingSet& data);

// Shortest decimal string that parses back to the same double.
std::string format_double(double value);
double parse_double(std::string_view text);

}  // namespace qperc

#endif  // QPERC_DATASET_IO_H_
