#pragma once

#include <string>

#include "commands.hpp"

namespace movmed::cli {

enum class Format { json, csv, text };

Format parse_format(const std::string& name);

// json: one object, numbers in shortest round-trip form.
// csv: header row then data rows.  A report with a "rows" array becomes one
//      line per row; any other report is a single row.  Nested keys are
//      flattened with '_' and array indices.
// text: key = value lines, numbers to 6 significant digits.
std::string render(const json& report, Format format);

}  // namespace movmed::cli
