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

#include <cmath>
#include <ostream>

#include <CLI11.hpp>

#include "bornlab/cli/cli.hpp"
#include "bornlab/quantum/joint_state.hpp"

namespace bornlab::cli {
namespace {

constexpr std::size_t kMaxRows = 10'000'000;

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

bool open_unit(double x) { return x > 0.0 && x < 1.0; }
bool closed_unit(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

const char* to_string(Command command) {
  switch (command) {
    case Command::kFrequency: return "frequency";
    case Command::kChebyshev: return "chebyshev";
    case Command::kPosterior: return "posterior";
    case Command::kDecision: return "decision";
    case Command::kEvolve: return "evolve";
    case Command::kDecohere: return "decohere";
  }
  return "unknown";
}

void validate(const RunConfig& c) {
  require(c.n >= 1, "--n must be at least 1");
  require(std::isfinite(c.rho_u) && closed_unit(c.rho_u), "--rho-u must lie in [0, 1]");
  if (c.delta_z) require(*c.delta_z > 0.0 && *c.delta_z <= 1.0, "--delta-z must lie in (0, 1]");
  if (c.grid_step) {
    const double s = *c.grid_step;
    require(s > 0.0 && s <= 0.5, "--grid-step must lie in (0, 0.5]");
    const double intervals = std::round(1.0 / s);
    require(std::abs(intervals * s - 1.0) <= 1e-9, "--grid-step must divide [0, 1] evenly");
  }
  if (c.w_u) require(std::isfinite(*c.w_u) && closed_unit(*c.w_u), "--w-u must lie in [0, 1]");
  if (c.z) require(std::isfinite(*c.z) && closed_unit(*c.z), "--z must lie in [0, 1]");
  if (c.duration) require(std::isfinite(*c.duration), "--duration must be finite");
  if (c.overlap) require(std::abs(*c.overlap) <= 1.0, "--overlap must satisfy |g| <= 1");
  require(c.command == Command::kFrequency || c.table == "density",
          "--table applies to the frequency command only");

  switch (c.command) {
    case Command::kFrequency:
      require(open_unit(c.rho_u), "frequency: --rho-u must lie strictly inside (0, 1)");
      require(c.n < kMaxRows, "frequency: --n too large for a row-per-count table");
      require(c.table == "density" || c.table == "counts" || c.table == "bars",
              "--table must be one of density, counts, bars");
      break;
    case Command::kChebyshev:
      require(open_unit(c.rho_u), "chebyshev: --rho-u must lie strictly inside (0, 1)");
      require(c.n <= 10'000'000, "chebyshev: --n at most 1e7");
      break;
    case Command::kPosterior:
      require(c.z.has_value() || c.seed.has_value(),
              "posterior: give the observed frequency --z or a --seed to sample a branch");
      break;
    case Command::kDecision:
      require(c.w_u.has_value(), "decision: --w-u is required");
      require(open_unit(c.rho_u) && open_unit(*c.w_u),
              "decision: --rho-u and --w-u must lie strictly inside (0, 1)");
      require(c.n < kMaxRows, "decision: --n too large for a row-per-count table");
      break;
    case Command::kEvolve:
      require(c.n <= 1'000'000, "evolve: --n (time steps) at most 1e6");
      break;
    case Command::kDecohere:
      require(c.n <= quantum::kMaxEnvironmentQubits,
              "decohere: --n (environment qubits) at most " +
                  std::to_string(quantum::kMaxEnvironmentQubits));
      break;
  }
}

nlohmann::ordered_json config_to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["command"] = to_string(c.command);
  j["rho_u"] = c.rho_u;
  if (c.w_u) j["w_u"] = *c.w_u;
  j["n"] = c.n;
  if (c.delta_z) j["delta_z"] = *c.delta_z;
  if (c.grid_step) j["grid_step"] = *c.grid_step;
  if (c.seed) j["seed"] = *c.seed;
  if (c.z) j["z"] = *c.z;
  if (c.duration) j["duration"] = *c.duration;
  if (c.overlap) j["overlap"] = *c.overlap;
  if (c.command == Command::kFrequency) j["table"] = c.table;
  j["format"] = c.format == Format::kCsv ? "csv" : "json";
  return j;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"bornlab: branch presence, inference and decision experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunConfig config;
  std::string format = "csv";
  const std::vector<std::pair<Command, std::string>> commands = {
      {Command::kFrequency, "Presence density of the relative frequency (exact, Gaussian, histogram)"},
      {Command::kChebyshev, "Exact tail mass against the Chebyshev bound, and the Finkelstein norm"},
      {Command::kPosterior, "Posterior over the single-event probability from an observed frequency"},
      {Command::kDecision, "Presence against agent weights; betting example"},
      {Command::kEvolve, "Two-level unitary evolution under sigma_x with norm tracking"},
      {Command::kDecohere, "Coherence decay with the number of environment qubits"},
  };
  for (const auto& [command, help] : commands) {
    CLI::App* sub = app.add_subcommand(to_string(command), help);
    sub->add_option("--rho-u", config.rho_u, "Presence of the focus outcome")->capture_default_str();
    sub->add_option("--w-u", config.w_u, "Agent weight for the focus outcome");
    sub->add_option("--n", config.n, "Repetitions (time steps for evolve, qubits for decohere)")
        ->capture_default_str();
    sub->add_option("--delta-z", config.delta_z, "Bin width in relative frequency");
    sub->add_option("--grid-step", config.grid_step, "Posterior grid step");
    sub->add_option("--seed", config.seed, "Seed for branch sampling");
    sub->add_option("--z", config.z, "Observed relative frequency");
    sub->add_option("--duration", config.duration, "Total evolution time");
    sub->add_option("--overlap", config.overlap, "Environment overlap g per qubit");
    sub->add_option("--table", config.table, "frequency table: density, counts or bars")
        ->capture_default_str();
    sub->add_option("--out", config.output_path, "Output file, '-' for stdout")
        ->capture_default_str();
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->callback([&config, command = command] { config.command = command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  config.format = format == "json" ? Format::kJson : Format::kCsv;

  std::string content;
  try {
    content = render(config, run(config));
  } catch (const std::logic_error& e) {
    // UsageError and the library's argument, domain and size errors.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (config.output_path == "-") {
      out << content;
      out.flush();
      if (!out) throw IoError("failed writing to stdout");
    } else {
      write_atomically(config.output_path, content);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace bornlab::cli
