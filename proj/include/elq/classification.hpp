#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "elq/combinatorics.hpp"
#include "elq/system.hpp"

namespace elq {

namespace cls {

struct Empty {};

/// C.L >= 1: the curve is not a fixed component.
struct CaseOne {
    DefectVector defects;
};

/// (2m; m^8, m_9, ..., m_r) with r >= 8.
struct CaseTwo {
    std::int64_t m = 0;
};

/// C.L <= 0 with t <= m_r and d >= m_1 + t; t times the curve is fixed.
struct CaseThree {
    DefectVector defects;
    std::int64_t t = 0;
    std::int64_t b = 0;
    std::int64_t n = 0;  ///< u - (r-8)(t-1), always in [0, r-9]
    std::int64_t u = 0;  ///< -C.L
};

/// d < m_1 + t: the cubic cone over the curve with vertex p_1 is fixed;
/// `residual` is the system minus that cone.
struct Cone {
    FatPointSystem residual;
    std::int64_t t = 0;
};

/// b < r: the tail multiplicities can be raised to t without changing the
/// dimension.
struct Truncate {
    FatPointSystem replacement;
    std::int64_t t = 0;
    std::int64_t b = 0;
};

}  // namespace cls

using Classification = std::variant<cls::Empty, cls::CaseOne, cls::CaseTwo, cls::CaseThree, cls::Cone, cls::Truncate>;

/// "empty" | "one" | "two" | "three" | "cone" | "truncate".
std::string_view case_name(const Classification& c);

/// m = d/2 when d is even, r >= 8 and m_1 = ... = m_8 = d/2.
std::optional<std::int64_t> is_case_two(const FatPointSystem& sys);

/// max{ i in [9, r] : 4d - (m_1 + ... + m_i) + m_i (i - 8) >= 1 }.
std::optional<std::int64_t> compute_b(const FatPointSystem& sys);

/// ceil((m_1 + ... + m_b - 4d + 1) / (b - 8)); requires b >= 9.
std::int64_t compute_t(const FatPointSystem& sys, std::int64_t b);

/// Decides which case a standard, non-empty, zero-free system falls into.
/// Throws PreconditionViolated if one of the structural claims fails (b
/// undefined, n out of range, cone hypotheses).
Classification classify(const FatPointSystem& sys);

/// {"case": ..., derived numbers...}.
nlohmann::json classification_json(const Classification& c);

}  // namespace elq
