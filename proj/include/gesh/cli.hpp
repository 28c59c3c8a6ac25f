#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gesh/regular.hpp"
#include "gesh/sexagesimal.hpp"

namespace gesh {

enum class OutputFormat { Text, Json, Tsv };

// Runs one CLI invocation. `args` holds the arguments in natural order,
// without the program name. Returns the process exit code: 0 on success,
// 1 for domain errors (irregular numbers, non-terminating expansions, bad
// magnitudes), 2 for usage and syntax errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

// Serializes a reciprocal table. TSV columns: family, index,
// value_sexagesimal (floating style), value_decimal, igi_sexagesimal;
// header row, LF endings, trailing newline. JSON mirrors the fields as an
// `entries` array plus the family list and n_max.
void export_table(const ReciprocalTable& table, OutputFormat format, std::ostream& out,
                  FormatStyle igi_style = FormatStyle::Canonical);
void export_table_file(const ReciprocalTable& table, OutputFormat format,
                       const std::string& path,
                       FormatStyle igi_style = FormatStyle::Canonical);  // IoError

// Reads a table back, recomputing each reciprocal and checking it against
// the serialized cell; a mismatch or malformed row raises SyntaxError.
ReciprocalTable import_table(std::istream& in, OutputFormat format);

}  // namespace gesh
