#pragma once

#include <cstdint>
#include <vector>

#include "elq/system.hpp"

namespace elq {

/// Binomial coefficient with the total convention binom(n, k) = 0 whenever
/// n < k or n < 0. Throws InternalError on overflow.
std::int64_t binom(std::int64_t n, std::int64_t k);

/// binom(d+3, 3) - sum binom(m_i+2, 3) - 1. Rejects negative degree.
std::int64_t virtual_dim(const FatPointSystem& sys);

/// max(-1, virtual_dim); -1 for negative degree.
std::int64_t expected_dim(const FatPointSystem& sys);

/// C.L = 4d - sum m_i, the degree of the system on the strict transform of
/// the quartic curve.
std::int64_t anticanonical_degree(const FatPointSystem& sys);

/// Multiplicities t_i with which the lines l_i are forced into the base
/// locus. Entry 0 is t_1 for the line p_2 p_3; entry i-1 (i >= 2) is t_i for
/// the line p_1 p_i.
struct DefectVector {
    std::vector<std::int64_t> entries;

    [[nodiscard]] std::size_t size() const noexcept { return entries.size(); }
    [[nodiscard]] std::int64_t at(std::size_t i) const { return entries.at(i - 1); }
    /// 1-based indices i with t_i > 0.
    [[nodiscard]] std::vector<int> support() const;
    /// sum binom(t_i + 1, 3).
    [[nodiscard]] std::int64_t correction() const;

    friend bool operator==(const DefectVector&, const DefectVector&) = default;
};

/// t_1 = max(0, m_2 + m_3 - d) (0 when r < 3), t_i = max(0, m_1 + m_i - d).
DefectVector line_defects(const FatPointSystem& sys);

}  // namespace elq
