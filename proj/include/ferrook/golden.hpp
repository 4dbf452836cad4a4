#pragma once

#include "ferrook/bigint.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ferrook {

struct GoldenResult {
    std::string label;
    std::string kind;
    std::string expected;
    std::string actual;
    bool pass = false;
    std::string detail;  // extra context, e.g. the construction q of a table row
};

/// Path of the golden-value file shipped in data/.
std::string default_golden_path();

nlohmann::json load_golden(const std::string& path);

/// Evaluates every entry. An entry that throws is reported as a failure
/// with the exception text in `actual`.
std::vector<GoldenResult> run_golden(const nlohmann::json& doc);
GoldenResult run_golden_entry(const nlohmann::json& entry);

/// Rounded scientific check used for printed approximations such as "1.06e33":
/// same sign, same decimal exponent, and the same leading significant digits
/// after rounding half up to as many digits as were printed.
bool matches_rounded(const BigInt& value, const std::string& printed);

/// "d.dd...e<exp>" with `digits` significant digits, rounded half up.
std::string to_scientific(const BigInt& value, int digits);

/// Smallest prime power q with q >= max |D_i ∩ F| - 1 over the diagonals
/// used by the construction (oriented so that m >= n).
long construction_min_q(const std::string& diagram, int d);

}  // namespace ferrook
