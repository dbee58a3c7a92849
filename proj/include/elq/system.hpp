#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace elq {

/// The datum (d; m_1, ..., m_r): degree-d surfaces of P^3 with multiplicity
/// at least m_i at the i-th of r general points on an elliptic quartic curve.
///
/// Degree and multiplicities may be negative transiently (inside reduction);
/// `normalized()` brings the multiplicities to the canonical state.
struct FatPointSystem {
    std::int64_t degree = 0;
    std::vector<std::int64_t> mults;

    [[nodiscard]] std::size_t r() const noexcept { return mults.size(); }

    /// Multiplicities clamped at 0, zeros dropped, sorted non-increasing.
    [[nodiscard]] FatPointSystem normalized() const;

    [[nodiscard]] bool is_normalized() const noexcept;

    /// Sum of the first `count` multiplicities, padding with zeros.
    [[nodiscard]] std::int64_t leading_sum(std::size_t count) const;

    /// Multiplicity m_i with 1-based index; 0 past the end.
    [[nodiscard]] std::int64_t mult(std::size_t i) const noexcept {
        return (i >= 1 && i <= mults.size()) ? mults[i - 1] : 0;
    }

    friend bool operator==(const FatPointSystem&, const FatPointSystem&) = default;
};

/// Parses the comma shorthand "5,1x19" (5 followed by nineteen 1s). Spaces
/// are allowed around separators; the empty string is the empty list.
std::vector<std::int64_t> parse_multiplicities(std::string_view text);

/// Inverse of `parse_multiplicities`, collapsing runs: {5,1,1,1} -> "5,1x3".
std::string format_multiplicities(const std::vector<std::int64_t>& mults);

/// "(d; m_1,...,m_r)" using the a^k run notation, for diagnostics.
std::string to_string(const FatPointSystem& sys);

void to_json(nlohmann::json& j, const FatPointSystem& sys);
void from_json(const nlohmann::json& j, FatPointSystem& sys);

}  // namespace elq
