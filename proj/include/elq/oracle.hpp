#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "elq/system.hpp"

namespace elq::oracle {

inline constexpr std::uint64_t kPrimaryPrime = 2147483647ULL;    // 2^31 - 1
inline constexpr std::uint64_t kSecondaryPrime = 2147483629ULL;

using Point = std::array<std::uint64_t, 4>;

/// Degree-2 monomials of x_0..x_3 in deglex order:
/// x0^2, x0x1, x0x2, x0x3, x1^2, x1x2, x1x3, x2^2, x2x3, x3^2.
using QuadricCoeffs = std::array<std::uint64_t, 10>;

/// An elliptic quartic {x0 x3 - x1 x2 = 0} cap {q = 0} over F_p with r sampled
/// points on it, normalized so their first nonzero coordinate is 1.
struct CurveInstance {
    std::uint64_t prime = 0;
    QuadricCoeffs second_quadric{};
    std::vector<Point> points;
    std::uint64_t seed = 0;
};

std::uint64_t eval_quadric(const QuadricCoeffs& q, const Point& x, std::uint64_t p);
std::uint64_t eval_ruled_quadric(const Point& x, std::uint64_t p);

/// Both quadrics vanish, and their gradients are independent at `x`.
bool is_smooth_curve_point(const CurveInstance& curve, const Point& x);

/// Deterministic in (p, r, seed). Samples points along rulings of the fixed
/// quadric by solving the restricted second quadric; throws UsageError when p
/// is not a prime below 2^32, InternalError after the retry cap.
CurveInstance make_curve(std::uint64_t p, std::size_t r, std::uint64_t seed);

/// Exponent vectors of the degree-d monomials in 4 variables, x0^d first.
std::vector<std::array<int, 4>> monomials(int degree);

/// Dense matrix over F_p, row-major.
struct ConditionMatrix {
    std::uint64_t prime = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint64_t> data;

    [[nodiscard]] std::uint64_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// One row per point and multi-index alpha with |alpha| = min(m_i - 1, d):
/// the alpha-th partial derivative of each degree-d monomial at the point.
/// Requires p > d. `mults` is aligned with `curve.points` (extra points are
/// ignored, fewer points is an error).
ConditionMatrix condition_matrix(std::int64_t degree, const CurveInstance& curve, const std::vector<std::int64_t>& mults);

/// Rank over F_p by Gaussian elimination on a copy.
std::size_t rank_mod_p(const ConditionMatrix& mat);

struct Trial {
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    std::int64_t rank = 0;
    std::int64_t dim = 0;
};

struct OracleResult {
    std::int64_t dim = -1;  ///< minimum over trials
    std::vector<Trial> trials;
    bool stable = true;  ///< every trial agreed
};

struct OracleOptions {
    std::vector<std::uint64_t> seeds{1};
    std::vector<std::uint64_t> primes{kPrimaryPrime};
};

/// Dimension measured directly: binom(d+3,3) - 1 - rank for each (prime,
/// seed) pair, aggregated as the minimum.
OracleResult oracle_dimension(const FatPointSystem& sys, const OracleOptions& opts);

void to_json(nlohmann::json& j, const Trial& t);
void to_json(nlohmann::json& j, const OracleResult& r);

}  // namespace elq::oracle
