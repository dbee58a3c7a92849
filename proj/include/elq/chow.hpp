#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "elq/classification.hpp"
#include "elq/combinatorics.hpp"
#include "elq/system.hpp"

namespace elq::chow {

/// X (no lines, no curve), Y_I (lines l_i, i in I) or the further blow-up
/// along the curve. Line l_1 joins p_2 and p_3; l_i (i >= 2) joins p_1, p_i.
class AmbientSpace {
public:
    static AmbientSpace points(int r);
    static AmbientSpace with_lines(int r, std::vector<int> lines);
    static AmbientSpace with_lines_and_curve(int r, std::vector<int> lines);

    [[nodiscard]] int r() const noexcept { return r_; }
    [[nodiscard]] const std::vector<int>& lines() const noexcept { return lines_; }
    [[nodiscard]] bool curve_blown() const noexcept { return curve_; }
    [[nodiscard]] int a() const noexcept { return static_cast<int>(lines_.size()); }
    [[nodiscard]] int epsilon() const noexcept { return has_line(1) ? 1 : 0; }
    [[nodiscard]] bool has_line(int i) const noexcept;

    /// Basis H, E_1..E_r, F_i (i in I, ascending), F (if blown).
    [[nodiscard]] std::size_t basis_size() const noexcept;
    [[nodiscard]] std::size_t h_index() const noexcept { return 0; }
    [[nodiscard]] std::size_t e_index(int i) const noexcept { return static_cast<std::size_t>(i); }
    [[nodiscard]] std::size_t line_index(int i) const;
    [[nodiscard]] std::size_t curve_index() const;

    friend bool operator==(const AmbientSpace&, const AmbientSpace&) = default;

private:
    AmbientSpace(int r, std::vector<int> lines, bool curve);
    int r_ = 0;
    std::vector<int> lines_;
    bool curve_ = false;
};

/// dH - sum m_i E_i - sum t_i F_i - t F, stored as signed coordinates in the
/// ambient's basis.
class DivisorClass {
public:
    explicit DivisorClass(AmbientSpace amb);

    /// Builds dH - sum m_i E_i - sum_{(i,t_i)} t_i F_i - t F. Missing trailing
    /// m_i are 0; lines must belong to the ambient.
    static DivisorClass from_system(const AmbientSpace& amb, std::int64_t d, const std::vector<std::int64_t>& m,
                                    const std::map<int, std::int64_t>& line_mults = {}, std::int64_t t = 0);

    static DivisorClass hyperplane(const AmbientSpace& amb);
    static DivisorClass exceptional_point(const AmbientSpace& amb, int i);
    static DivisorClass exceptional_line(const AmbientSpace& amb, int i);
    static DivisorClass exceptional_curve(const AmbientSpace& amb);

    [[nodiscard]] const AmbientSpace& ambient() const noexcept { return amb_; }
    [[nodiscard]] const std::vector<std::int64_t>& coords() const noexcept { return coords_; }
    [[nodiscard]] std::int64_t coord(std::size_t i) const { return coords_.at(i); }

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(std::int64_t s, DivisorClass a);
    friend DivisorClass operator-(DivisorClass a) { return -1 * std::move(a); }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

private:
    AmbientSpace amb_;
    std::vector<std::int64_t> coords_;
};

/// Codimension-two class over {H^2, E_i^2, H F, E_i F}.
struct TwoCycle {
    std::int64_t h2 = 0;
    std::vector<std::int64_t> e2;  ///< index i-1 holds the E_i^2 coefficient
    std::int64_t hf = 0;
    std::vector<std::int64_t> ef;  ///< index i-1 holds the E_i F coefficient

    friend bool operator==(const TwoCycle&, const TwoCycle&) = default;
};

/// D1 . D2 . D3 from the table of non-vanishing monomials:
/// H^3 = E_i^3 = 1; H F_i^2 = -1; E_j F_i^2 = -1 for p_j on l_i; F_i^3 = 2;
/// H F^2 = -4; E_i F^2 = -1; F^3 = 2(r-8). Everything else is 0.
std::int64_t triple_product(const DivisorClass& d1, const DivisorClass& d2, const DivisorClass& d3,
                            const AmbientSpace& amb);

/// c_1 of the ambient: 4H - 2 sum E_i - sum F_i - F.
DivisorClass first_chern(const AmbientSpace& amb);

/// K = -c_1.
DivisorClass canonical_class(const AmbientSpace& amb);

TwoCycle second_chern(const AmbientSpace& amb);

/// Pairs a two-cycle with a divisor: H^2.H = 1, E_i^2.E_i = 1, HF.F = -4,
/// E_iF.F = -1, all other basis pairings 0.
std::int64_t pair(const TwoCycle& c, const DivisorClass& d, const AmbientSpace& amb);

struct EulerCharacteristic {
    std::int64_t chi = 0;
    std::int64_t bracket = 0;  ///< D(D-K)(2D-K) + c_2.D
    std::int64_t c2_dot_d = 0;
};

/// Riemann-Roch on a rational threefold: chi = [D(D-K)(2D-K) + c_2 D]/12 + 1.
/// Throws InternalError if 12 does not divide the bracket.
EulerCharacteristic euler_characteristic(const DivisorClass& d, const AmbientSpace& amb);

/// chi(X, dH - sum m_i E_i).
std::int64_t chi_points(const FatPointSystem& sys);

/// (chi on Y_I of (d; m; {t_i}), chi_X + sum binom(t_i+1, 3)), I = {i : t_i > 0}.
std::pair<std::int64_t, std::int64_t> chi_identity_case1(const FatPointSystem& sys, const DefectVector& defects);

/// (chi_Y(d; m; {t_i}), chi_Ytilde(d; m; {t_i}; t) + (r-8) binom(t+1,3) + y binom(t+1,2))
/// with y = -n: the form written in the case-three argument. Equality holds
/// for t = 1 only; see `chi_curve_drop` for the general relation.
std::pair<std::int64_t, std::int64_t> chi_identity_case3(const FatPointSystem& sys, const cls::CaseThree& c);

/// chi_Y - chi_Ytilde for removing t times the curve, computed from the
/// normal bundle of an elliptic curve with C.K_Y = 2r - 16:
/// sum_{k<t} chi(C, L|_C (x) Sym^k N^*) = (C.L) binom(t+1,2) + 2(r-8) binom(t+1,3).
std::int64_t chi_curve_drop(std::int64_t c_dot_l, std::int64_t r, std::int64_t t);

/// chi on the curve blow-up of (d; m; {t_i}; t); its value minus one is the
/// dimension of a case-three system.
std::int64_t chi_case3_ytilde(const FatPointSystem& sys, const cls::CaseThree& c);

}  // namespace elq::chow
