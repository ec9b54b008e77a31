// SPDX-License-Identifier: Apache-2.0
//
// CSV + manifest output.
//
// Every result file is a plain CSV with a `#`-prefixed metadata header:
// tool version, free-form notes, and the complete config echo (as `# cfg:`
// lines) that regenerates the body.  Floats are printed with 17 significant
// digits so a round trip through text is lossless.  Nothing time- or
// host-dependent goes into the CSV -- identical inputs give byte-identical
// files regardless of thread count or wall clock; the run timestamp lives
// only in the JSON manifest written next to the data.

#ifndef UDW_CSV_HPP
#define UDW_CSV_HPP

#include <string>
#include <vector>

namespace udw {

std::string format_double(double v);  // %.17g

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> columns);

  /// Add a '# ...' header line (order preserved).
  void note(const std::string& line);
  /// Add the config echo as '# cfg: key = value' lines.
  void echo_config(const std::string& echo);
  /// Append a data row; must match the column count.
  void add_row(const std::vector<double>& values);

  int rows() const { return n_rows_; }
  const std::vector<std::string>& columns() const { return columns_; }

  /// Render the whole file: version line, notes, cfg echo, column header,
  /// data rows.
  std::string str() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::string> notes_;
  std::vector<std::string> cfg_lines_;
  std::string body_;
  int n_rows_ = 0;
};

/// One output file of a run, ready to be written.
struct OutputFile {
  std::string name;      // file name relative to the output dir
  std::string text;      // full CSV content
  std::string config;    // config echo that regenerates it ("" for derived)
  std::string derived_from;  // for derived files: how the body was obtained
  int rows = 0;
  std::vector<std::string> warnings;
};

/// Write all files plus `<label>_manifest.json` into out_dir (created if
/// missing).  `failures` lists human-readable descriptions of grid points
/// that failed; a nonempty list marks the manifest status "partial".
/// Returns the manifest path.  Throws udw::Error on I/O failure.
std::string write_bundle(const std::string& out_dir, const std::string& label,
                         const std::string& command,
                         const std::vector<OutputFile>& files,
                         const std::vector<std::string>& failures,
                         double elapsed_seconds);

}  // namespace udw

#endif  // UDW_CSV_HPP
