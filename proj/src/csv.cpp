// SPDX-License-Identifier: Apache-2.0

#include "udw/csv.hpp"

#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "udw/errors.hpp"
#include "udw/version.hpp"

namespace udw {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> columns)
    : columns_(std::move(columns)) {
  if (columns_.empty()) throw Error("CsvWriter: no columns");
}

void CsvWriter::note(const std::string& line) { notes_.push_back(line); }

void CsvWriter::echo_config(const std::string& echo) {
  std::istringstream in(echo);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) cfg_lines_.push_back(line);
}

void CsvWriter::add_row(const std::vector<double>& values) {
  if (values.size() != columns_.size())
    throw Error("CsvWriter: row has " + std::to_string(values.size()) +
                " values, expected " + std::to_string(columns_.size()));
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) body_ += ',';
    body_ += format_double(values[i]);
  }
  body_ += '\n';
  ++n_rows_;
}

std::string CsvWriter::str() const {
  std::string out = "# udw ";
  out += kVersion;
  out += '\n';
  for (const auto& n : notes_) {
    out += "# ";
    out += n;
    out += '\n';
  }
  for (const auto& c : cfg_lines_) {
    out += "# cfg: ";
    out += c;
    out += '\n';
  }
  for (size_t i = 0; i < columns_.size(); ++i) {
    if (i) out += ',';
    out += columns_[i];
  }
  out += '\n';
  out += body_;
  return out;
}

namespace {

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.close();
  if (!out) throw Error("cannot write '" + path.string() + "'");
}

}  // namespace

std::string write_bundle(const std::string& out_dir, const std::string& label,
                         const std::string& command,
                         const std::vector<OutputFile>& files,
                         const std::vector<std::string>& failures,
                         double elapsed_seconds) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error("cannot create output dir '" + out_dir + "'");

  nlohmann::json manifest;
  manifest["tool"] = "udw";
  manifest["version"] = kVersion;
  manifest["command"] = command;
  manifest["status"] = failures.empty() ? "ok" : "partial";
  manifest["elapsed_seconds"] = elapsed_seconds;

  char stamp[32];
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  manifest["generated_utc"] = stamp;

  manifest["failures"] = failures;
  manifest["files"] = nlohmann::json::array();
  for (const auto& f : files) {
    write_text_file(fs::path(out_dir) / f.name, f.text);
    nlohmann::json entry;
    entry["name"] = f.name;
    entry["rows"] = f.rows;
    entry["warnings"] = f.warnings;
    if (!f.config.empty()) entry["config"] = f.config;
    if (!f.derived_from.empty()) entry["derived_from"] = f.derived_from;
    manifest["files"].push_back(entry);
  }

  const fs::path mpath = fs::path(out_dir) / (label + "_manifest.json");
  write_text_file(mpath, manifest.dump(2) + "\n");
  return mpath.string();
}

}  // namespace udw
