#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "elq/classification.hpp"
#include "elq/system.hpp"

namespace elq {

/// v + sum binom(t_i+1, 3) for a standard system with C.L >= 1.
std::int64_t dim_case_one(const FatPointSystem& sys);

/// dim (2m; m^r) = m for r >= 8.
std::int64_t dim_case_two(std::int64_t m);

/// v + sum binom(t_i+1,3) + (r-8) binom(t+1,3) + n binom(t+1,2).
std::int64_t dim_case_three(const FatPointSystem& sys, const cls::CaseThree& c);

/// One hop of the driver: "normalize", "reduce", "classify", "truncate",
/// "cone" or "formula", with the system it acted on.
struct DriverHop {
    std::string action;
    FatPointSystem system;
    nlohmann::json detail;
};

struct DimensionResult {
    std::int64_t dim = -1;
    std::optional<std::int64_t> vdim;  ///< of the input; absent for negative degree
    std::int64_t edim = -1;
    std::int64_t speciality = 0;  ///< dim - edim of the input
    std::vector<std::string> case_path;
    std::vector<DriverHop> trace;
    /// System the closing formula was applied to, with its classification.
    std::optional<FatPointSystem> terminal;
    Classification terminal_case = cls::Empty{};
};

/// Exact projective dimension of L(d; m_1, ..., m_r) for arbitrary integer
/// input, -1 when empty. Normalizes, reduces, classifies and recurses through
/// truncation and cone subtraction until a closed formula applies.
DimensionResult dimension(const FatPointSystem& sys);

void to_json(nlohmann::json& j, const DriverHop& h);
/// {dim, vdim, edim, speciality, case_path} and "trace" when `with_trace`.
nlohmann::json to_json(const DimensionResult& r, bool with_trace);

}  // namespace elq
