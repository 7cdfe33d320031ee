#pragma once

#include "wsp/bounds.hpp"
#include "wsp/cotangent.hpp"
#include "wsp/enumerate.hpp"
#include "wsp/semigroup.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace wsp {

// Full machine-readable report for one semigroup: invariants, graded T^1 and
// the bounds block. Field order is fixed.
nlohmann::json json_report(const NumericalSemigroup& s);

// `1, 2, 4, 5, 8` style list used in the text reports.
std::string join(const std::vector<long long>& values);

// Human-readable summaries printed by the CLI.
std::string info_text(const NumericalSemigroup& s);
std::string t1_text(const NumericalSemigroup& s, const GradedT1Table& table);
std::string bounds_text(const NumericalSemigroup& s, const BoundsReport& report);

inline constexpr const char* kCsvHeader =
    "gaps;generators;genus;lambda;ewt;t1_plus;t1_minus;pflueger;new_lower;rv";

std::string csv_row(const NumericalSemigroup& s, const BoundsReport& report);

std::string table1_text(const std::vector<Table1Row>& rows);

} // namespace wsp
