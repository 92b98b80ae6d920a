#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace psifrac::cli {

// 17 significant digits, round-trippable.
std::string format_number(double v);

// Header row, then one row per index; all columns must share a length.
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);

}  // namespace psifrac::cli
