#pragma once

// Serialization of statistic tables and verification reports.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "partlab/stats.hpp"
#include "partlab/verify.hpp"

namespace partlab {

using ordered_json = nlohmann::ordered_json;

/// A JSON number when |v| <= 2^53, otherwise its decimal string.
ordered_json bigint_to_json(const BigInt& v);
/// Accepts either encoding produced by bigint_to_json.
BigInt bigint_from_json(const ordered_json& j);

/// Header `n,value`, one row per n, '\n' line endings.
std::string table_to_csv(const StatTable& t);
/// Parses table_to_csv output back into values; the id and params are not
/// part of the CSV and are supplied by the caller.
StatTable table_from_csv(std::string_view csv, StatId id, StatParams params);
ordered_json table_to_json(const StatTable& t);
std::string table_to_text(const StatTable& t);

ordered_json report_to_json(const VerificationReport& r);
/// {"passed": ..., "suites": [...]} followed by a newline.
std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::string reports_to_csv(const std::vector<VerificationReport>& reports);
/// Fixed-width table plus the first failing cell of each failed suite.
std::string reports_to_text(const std::vector<VerificationReport>& reports, bool timings = false);

/// "n=5 k=3 ell=1" style description of a cell.
std::string describe_params(const CaseParams& p);

}  // namespace partlab
