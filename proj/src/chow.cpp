#include "elq/chow.hpp"

#include <algorithm>
#include <array>

#include "elq/checked.hpp"
#include "elq/error.hpp"

namespace elq::chow {

AmbientSpace::AmbientSpace(int r, std::vector<int> lines, bool curve) : r_(r), lines_(std::move(lines)), curve_(curve) {
    if (r < 0) throw UsageError("ambient needs r >= 0");
    std::sort(lines_.begin(), lines_.end());
    if (std::adjacent_find(lines_.begin(), lines_.end()) != lines_.end()) throw UsageError("repeated line index");
    for (int i : lines_) {
        if (i < 1 || i > r) throw UsageError("line index " + std::to_string(i) + " outside [1, r]");
        if (i == 1 && r < 3) throw UsageError("line l_1 joins p_2 and p_3 and needs r >= 3");
    }
}

AmbientSpace AmbientSpace::points(int r) { return AmbientSpace(r, {}, false); }
AmbientSpace AmbientSpace::with_lines(int r, std::vector<int> lines) { return AmbientSpace(r, std::move(lines), false); }
AmbientSpace AmbientSpace::with_lines_and_curve(int r, std::vector<int> lines) {
    return AmbientSpace(r, std::move(lines), true);
}

bool AmbientSpace::has_line(int i) const noexcept { return std::binary_search(lines_.begin(), lines_.end(), i); }

std::size_t AmbientSpace::basis_size() const noexcept {
    return 1 + static_cast<std::size_t>(r_) + lines_.size() + (curve_ ? 1 : 0);
}

std::size_t AmbientSpace::line_index(int i) const {
    auto it = std::lower_bound(lines_.begin(), lines_.end(), i);
    if (it == lines_.end() || *it != i) throw UsageError("line l_" + std::to_string(i) + " is not blown up");
    return 1 + static_cast<std::size_t>(r_) + static_cast<std::size_t>(it - lines_.begin());
}

std::size_t AmbientSpace::curve_index() const {
    if (!curve_) throw UsageError("the curve is not blown up in this ambient");
    return basis_size() - 1;
}

DivisorClass::DivisorClass(AmbientSpace amb) : amb_(std::move(amb)), coords_(amb_.basis_size(), 0) {}

DivisorClass DivisorClass::from_system(const AmbientSpace& amb, std::int64_t d, const std::vector<std::int64_t>& m,
                                       const std::map<int, std::int64_t>& line_mults, std::int64_t t) {
    if (m.size() > static_cast<std::size_t>(amb.r())) throw UsageError("more multiplicities than points in the ambient");
    DivisorClass out(amb);
    out.coords_[amb.h_index()] = d;
    for (std::size_t i = 0; i < m.size(); ++i) out.coords_[amb.e_index(static_cast<int>(i) + 1)] = -m[i];
    for (const auto& [i, ti] : line_mults) out.coords_[amb.line_index(i)] = -ti;
    if (t != 0) out.coords_[amb.curve_index()] = -t;
    return out;
}

DivisorClass DivisorClass::hyperplane(const AmbientSpace& amb) {
    DivisorClass out(amb);
    out.coords_[amb.h_index()] = 1;
    return out;
}

DivisorClass DivisorClass::exceptional_point(const AmbientSpace& amb, int i) {
    if (i < 1 || i > amb.r()) throw UsageError("point index outside [1, r]");
    DivisorClass out(amb);
    out.coords_[amb.e_index(i)] = 1;
    return out;
}

DivisorClass DivisorClass::exceptional_line(const AmbientSpace& amb, int i) {
    DivisorClass out(amb);
    out.coords_[amb.line_index(i)] = 1;
    return out;
}

DivisorClass DivisorClass::exceptional_curve(const AmbientSpace& amb) {
    DivisorClass out(amb);
    out.coords_[amb.curve_index()] = 1;
    return out;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    if (!(amb_ == o.amb_)) throw UsageError("adding divisors on different ambients");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked::add(coords_[i], o.coords_[i]);
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    if (!(amb_ == o.amb_)) throw UsageError("subtracting divisors on different ambients");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked::sub(coords_[i], o.coords_[i]);
    return *this;
}

DivisorClass operator*(std::int64_t s, DivisorClass a) {
    for (auto& c : a.coords_) c = checked::mul(s, c);
    return a;
}

namespace {

struct Monomial {
    std::array<std::size_t, 3> idx;  // sorted
    std::int64_t value;
};

// Points lying on line l_i.
std::array<int, 2> points_on_line(int i) { return i == 1 ? std::array<int, 2>{2, 3} : std::array<int, 2>{1, i}; }

std::vector<Monomial> intersection_table(const AmbientSpace& amb) {
    std::vector<Monomial> table;
    auto add = [&](std::size_t a, std::size_t b, std::size_t c, std::int64_t v) {
        std::array<std::size_t, 3> idx{a, b, c};
        std::sort(idx.begin(), idx.end());
        table.push_back({idx, v});
    };
    const auto h = amb.h_index();
    add(h, h, h, 1);
    for (int i = 1; i <= amb.r(); ++i) add(amb.e_index(i), amb.e_index(i), amb.e_index(i), 1);
    for (int i : amb.lines()) {
        const auto f = amb.line_index(i);
        add(h, f, f, -1);
        for (int j : points_on_line(i)) add(amb.e_index(j), f, f, -1);
        add(f, f, f, 2);
    }
    if (amb.curve_blown()) {
        const auto f = amb.curve_index();
        add(h, f, f, -4);
        for (int i = 1; i <= amb.r(); ++i) add(amb.e_index(i), f, f, -1);
        add(f, f, f, 2 * (static_cast<std::int64_t>(amb.r()) - 8));
    }
    return table;
}

void require_same(const AmbientSpace& a, const AmbientSpace& b) {
    if (!(a == b)) throw UsageError("divisor lives on a different ambient");
}

}  // namespace

std::int64_t triple_product(const DivisorClass& d1, const DivisorClass& d2, const DivisorClass& d3,
                            const AmbientSpace& amb) {
    require_same(d1.ambient(), amb);
    require_same(d2.ambient(), amb);
    require_same(d3.ambient(), amb);
    std::int64_t total = 0;
    for (const auto& mono : intersection_table(amb)) {
        // Sum over the distinct orderings of the monomial's factors.
        auto idx = mono.idx;
        std::int64_t coeff = 0;
        do {
            auto term = checked::mul(checked::mul(d1.coord(idx[0]), d2.coord(idx[1])), d3.coord(idx[2]));
            coeff = checked::add(coeff, term);
        } while (std::next_permutation(idx.begin(), idx.end()));
        total = checked::add(total, checked::mul(coeff, mono.value));
    }
    return total;
}

DivisorClass first_chern(const AmbientSpace& amb) {
    DivisorClass c = 4 * DivisorClass::hyperplane(amb);
    for (int i = 1; i <= amb.r(); ++i) c -= 2 * DivisorClass::exceptional_point(amb, i);
    for (int i : amb.lines()) c -= DivisorClass::exceptional_line(amb, i);
    if (amb.curve_blown()) c -= DivisorClass::exceptional_curve(amb);
    return c;
}

DivisorClass canonical_class(const AmbientSpace& amb) { return -first_chern(amb); }

TwoCycle second_chern(const AmbientSpace& amb) {
    const auto r = static_cast<std::size_t>(amb.r());
    TwoCycle c;
    c.e2.assign(r, 0);
    c.ef.assign(r, 0);
    const std::int64_t a = amb.a();
    c.h2 = 6 + a;
    if (r >= 1) c.e2[0] += a;
    for (int i : amb.lines()) {
        if (i != 1) c.e2[static_cast<std::size_t>(i - 1)] += 1;
    }
    if (amb.epsilon() == 1) {
        c.e2[1] += 1;
        c.e2[2] += 1;
        c.e2[0] -= 1;
    }
    if (amb.curve_blown()) {
        c.h2 += 4;
        for (auto& e : c.e2) e += 1;
        c.hf = -4;
        for (auto& e : c.ef) e = 2;
    }
    return c;
}

std::int64_t pair(const TwoCycle& c, const DivisorClass& d, const AmbientSpace& amb) {
    require_same(d.ambient(), amb);
    const auto r = static_cast<std::size_t>(amb.r());
    if (c.e2.size() != r || c.ef.size() != r) throw UsageError("two-cycle has the wrong number of points");
    std::int64_t s = checked::mul(c.h2, d.coord(amb.h_index()));
    for (std::size_t i = 0; i < r; ++i) s = checked::add(s, checked::mul(c.e2[i], d.coord(amb.e_index(static_cast<int>(i) + 1))));
    const bool curve_terms = c.hf != 0 || std::any_of(c.ef.begin(), c.ef.end(), [](auto v) { return v != 0; });
    if (curve_terms) {
        if (!amb.curve_blown()) throw UsageError("two-cycle involves F but the curve is not blown up");
        const auto f = d.coord(amb.curve_index());
        s = checked::add(s, checked::mul(checked::mul(c.hf, f), -4));
        for (auto e : c.ef) s = checked::add(s, checked::mul(checked::mul(e, f), -1));
    }
    return s;
}

EulerCharacteristic euler_characteristic(const DivisorClass& d, const AmbientSpace& amb) {
    const auto k = canonical_class(amb);
    const auto d_minus_k = d - k;
    const auto twice_d_minus_k = 2 * d - k;
    EulerCharacteristic out;
    out.c2_dot_d = pair(second_chern(amb), d, amb);
    out.bracket = checked::add(triple_product(d, d_minus_k, twice_d_minus_k, amb), out.c2_dot_d);
    if (out.bracket % 12 != 0) {
        throw InternalError("Riemann-Roch bracket " + std::to_string(out.bracket) + " is not divisible by 12");
    }
    out.chi = out.bracket / 12 + 1;
    return out;
}

std::int64_t chi_points(const FatPointSystem& sys) {
    const auto amb = AmbientSpace::points(static_cast<int>(sys.r()));
    return euler_characteristic(DivisorClass::from_system(amb, sys.degree, sys.mults), amb).chi;
}

namespace {

std::map<int, std::int64_t> positive_defects(const DefectVector& defects) {
    std::map<int, std::int64_t> out;
    for (int i : defects.support()) out[i] = defects.at(static_cast<std::size_t>(i));
    return out;
}

std::vector<int> keys(const std::map<int, std::int64_t>& m) {
    std::vector<int> out;
    for (const auto& kv : m) out.push_back(kv.first);
    return out;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> chi_identity_case1(const FatPointSystem& sys, const DefectVector& defects) {
    const int r = static_cast<int>(sys.r());
    const auto lines = positive_defects(defects);
    const auto amb_y = AmbientSpace::with_lines(r, keys(lines));
    const auto lhs = euler_characteristic(DivisorClass::from_system(amb_y, sys.degree, sys.mults, lines), amb_y).chi;
    const auto rhs = checked::add(chi_points(sys), defects.correction());
    return {lhs, rhs};
}

std::int64_t chi_case3_ytilde(const FatPointSystem& sys, const cls::CaseThree& c) {
    const int r = static_cast<int>(sys.r());
    const auto lines = positive_defects(c.defects);
    const auto amb = AmbientSpace::with_lines_and_curve(r, keys(lines));
    return euler_characteristic(DivisorClass::from_system(amb, sys.degree, sys.mults, lines, c.t), amb).chi;
}

std::pair<std::int64_t, std::int64_t> chi_identity_case3(const FatPointSystem& sys, const cls::CaseThree& c) {
    const auto r = static_cast<std::int64_t>(sys.r());
    const auto lines = positive_defects(c.defects);
    const auto amb_y = AmbientSpace::with_lines(static_cast<int>(r), keys(lines));
    const auto lhs = euler_characteristic(DivisorClass::from_system(amb_y, sys.degree, sys.mults, lines), amb_y).chi;
    const auto y = -c.n;
    auto rhs = chi_case3_ytilde(sys, c);
    rhs = checked::add(rhs, checked::mul(r - 8, binom(c.t + 1, 3)));
    rhs = checked::add(rhs, checked::mul(y, binom(c.t + 1, 2)));
    return {lhs, rhs};
}

std::int64_t chi_curve_drop(std::int64_t c_dot_l, std::int64_t r, std::int64_t t) {
    return checked::add(checked::mul(c_dot_l, binom(t + 1, 2)), checked::mul(2 * (r - 8), binom(t + 1, 3)));
}

}  // namespace elq::chow
