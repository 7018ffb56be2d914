#pragma once

#include <ostream>
#include <string>

#include "congru/registry.hpp"

namespace congru {

enum class Format { Json, Csv, Tsv };

Format parse_format(const std::string& s);

// One record as a JSON object; numbers are decimal strings.
std::string record_json(const SweepRecord& r, bool with_trace = false);

// JSON: an array of records closed by one {"summary": ...} element.
// CSV/TSV: header plus rows on `out`, summary line on `err`.
void write_report(std::ostream& out, std::ostream& err, const SweepResult& res, Format f, bool timing);

std::string summary_line(const SweepSummary& s, bool timing);

}  // namespace congru
