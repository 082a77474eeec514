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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "bornlab/cli/cli.hpp"

namespace bornlab::cli {
namespace {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string format_scalar(const nlohmann::ordered_json& v) {
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string render_csv(const RunConfig& config, const Table& table) {
  std::ostringstream os;
  os << "# bornlab " << kVersion;
  const auto config_json = config_to_json(config);
  for (const auto& [key, value] : config_json.items()) {
    if (key == "version") continue;
    os << ' ' << key << '=' << format_scalar(value);
  }
  if (!table.summary.empty()) os << " |";
  for (const auto& [key, value] : table.summary.items()) {
    os << ' ' << key << '=' << format_scalar(value);
  }
  os << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
    os << '\n';
  }
  return os.str();
}

std::string render_json(const RunConfig& config, const Table& table) {
  nlohmann::ordered_json doc;
  doc["config"] = config_to_json(config);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json entry;
    for (std::size_t i = 0; i < row.size(); ++i) entry[table.columns[i]] = row[i];
    rows.push_back(std::move(entry));
  }
  doc["rows"] = std::move(rows);
  doc["summary"] = table.summary;
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render(const RunConfig& config, const Table& table) {
  return config.format == Format::kJson ? render_json(config, table) : render_csv(config, table);
}

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp." + std::to_string(::getpid());

  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + temp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(temp, ignored);
      throw IoError("write to '" + temp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(temp, ignored);
    throw IoError("cannot move output into place at '" + path + "': " + ec.message());
  }
}

}  // namespace bornlab::cli
