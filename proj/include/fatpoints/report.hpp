#pragma once

#include <string>
#include <vector>

namespace fatpoints {

/// Rows of unquoted fields; fields must not contain commas or newlines,
/// which holds for every value this project emits.
using CsvRows = std::vector<std::vector<std::string>>;

/// Canonical CSV: fields joined by ',', every row terminated by '\n'.
/// emit_csv(parse_csv(s)) == s for any s produced by emit_csv.
std::string emit_csv(const CsvRows& rows);

CsvRows parse_csv(const std::string& text);

}  // namespace fatpoints
