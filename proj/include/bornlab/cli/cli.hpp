// Copyright 2026 The bornlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace bornlab::cli {

inline constexpr const char* kVersion = "1.0.0";

enum class Command { kFrequency, kChebyshev, kPosterior, kDecision, kEvolve, kDecohere };
enum class Format { kCsv, kJson };

const char* to_string(Command command);

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

// Invalid or inconsistent parameters; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Output could not be written; maps to exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::kFrequency;
  double rho_u = 0.3;
  std::optional<double> w_u;
  std::size_t n = 1000;
  std::optional<double> delta_z;
  std::optional<double> grid_step;
  std::optional<std::uint64_t> seed;
  std::optional<double> z;         // posterior: observed frequency
  std::optional<double> duration;  // evolve: total time
  std::optional<double> overlap;   // decohere: per-qubit environment overlap g
  std::string table = "density";   // frequency: density | counts | bars
  std::string output_path = "-";   // "-" writes to stdout
  Format format = Format::kCsv;
};

// Throws UsageError for parameter combinations the command cannot run.
void validate(const RunConfig& config);

// Computed artifact: named columns, numeric rows, scalar summary.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
};

// Validates, then runs the command. Pure: no I/O.
Table run(const RunConfig& config);

nlohmann::ordered_json config_to_json(const RunConfig& config);

// CSV: one '#' metadata line (version, config, summary), a header row, then
// rows with 17 significant digits. JSON: {config, rows, summary}.
std::string render(const RunConfig& config, const Table& table);

// Writes via a temporary file in the same directory and a rename, so a failed
// write leaves no file behind. Throws IoError.
void write_atomically(const std::string& path, const std::string& content);

// Parses argv, runs, writes. Returns the process exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bornlab::cli
