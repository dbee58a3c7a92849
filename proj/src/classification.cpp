#include "elq/classification.hpp"

#include <sstream>

#include "elq/checked.hpp"
#include "elq/detail/overloaded.hpp"
#include "elq/error.hpp"
#include "elq/reduction.hpp"

namespace elq {

using detail::overloaded;

namespace {

[[noreturn]] void violated(const FatPointSystem& sys, const std::string& what) {
    throw PreconditionViolated(what + " for " + to_string(sys));
}

}  // namespace

std::string_view case_name(const Classification& c) {
    return std::visit(overloaded{
                          [](const cls::Empty&) { return std::string_view("empty"); },
                          [](const cls::CaseOne&) { return std::string_view("one"); },
                          [](const cls::CaseTwo&) { return std::string_view("two"); },
                          [](const cls::CaseThree&) { return std::string_view("three"); },
                          [](const cls::Cone&) { return std::string_view("cone"); },
                          [](const cls::Truncate&) { return std::string_view("truncate"); },
                      },
                      c);
}

std::optional<std::int64_t> is_case_two(const FatPointSystem& sys) {
    if (sys.degree % 2 != 0 || sys.r() < 8) return std::nullopt;
    const auto m = sys.degree / 2;
    for (std::size_t i = 0; i < 8; ++i) {
        if (sys.mults[i] != m) return std::nullopt;
    }
    return m;
}

std::optional<std::int64_t> compute_b(const FatPointSystem& sys) {
    const auto r = static_cast<std::int64_t>(sys.r());
    std::optional<std::int64_t> best;
    std::int64_t prefix = sys.leading_sum(8);
    for (std::int64_t i = 9; i <= r; ++i) {
        const auto mi = sys.mults[static_cast<std::size_t>(i - 1)];
        prefix = checked::add(prefix, mi);
        const auto f = checked::add(checked::sub(checked::mul(4, sys.degree), prefix), checked::mul(mi, i - 8));
        if (f >= 1) best = i;
    }
    return best;
}

std::int64_t compute_t(const FatPointSystem& sys, std::int64_t b) {
    if (b < 9 || b > static_cast<std::int64_t>(sys.r())) {
        throw InternalError("compute_t called with b outside [9, r]");
    }
    const auto num = checked::add(checked::sub(sys.leading_sum(static_cast<std::size_t>(b)), checked::mul(4, sys.degree)), 1);
    return checked::ceil_div(num, b - 8);
}

Classification classify(const FatPointSystem& sys) {
    if (!sys.is_normalized() || !is_standard(sys) || sys.degree < sys.mult(1) || sys.degree < 0) {
        violated(sys, "classify expects a standard non-empty system");
    }
    const auto r = static_cast<std::int64_t>(sys.r());
    const auto cl = anticanonical_degree(sys);

    if (r == 0 || cl >= 1) return cls::CaseOne{line_defects(sys)};
    if (r <= 7) violated(sys, "standard system with r <= 7 must have C.L >= 1");
    if (auto m = is_case_two(sys)) return cls::CaseTwo{*m};

    const auto b = compute_b(sys);
    if (!b) violated(sys, "b is undefined");
    const auto t = compute_t(sys, *b);
    const auto mr = sys.mults.back();
    if ((t <= mr) != (*b == r)) violated(sys, "t <= m_r must hold exactly when b = r");
    if (t < 1) violated(sys, "t must be positive");

    if (*b < r) {
        const auto bi = static_cast<std::size_t>(*b);
        if (!(sys.mults[bi] < t && t <= sys.mults[bi - 1])) violated(sys, "expected m_{b+1} < t <= m_b");
        FatPointSystem replacement = sys;
        for (std::size_t i = bi; i < replacement.mults.size(); ++i) replacement.mults[i] = t;
        return cls::Truncate{std::move(replacement), t, *b};
    }

    const auto u = -cl;
    const auto n = checked::sub(u, checked::mul(r - 8, t - 1));
    if (n < 0 || n > r - 9) {
        std::ostringstream os;
        os << "n = " << n << " outside [0, r-9]";
        violated(sys, os.str());
    }

    if (sys.degree >= checked::add(sys.mult(1), t)) {
        return cls::CaseThree{line_defects(sys), t, *b, n, u};
    }

    const auto defects = line_defects(sys);
    if (r < 10) violated(sys, "cone branch requires r >= 10");
    if (defects.entries.back() <= 0) violated(sys, "cone branch requires t_r > 0");
    FatPointSystem residual = sys;
    residual.degree -= 3;
    residual.mults[0] -= 3;
    for (std::size_t i = 1; i < residual.mults.size(); ++i) residual.mults[i] -= 1;
    return cls::Cone{std::move(residual), t};
}

nlohmann::json classification_json(const Classification& c) {
    auto j = std::visit(overloaded{
                       [](const cls::Empty&) { return nlohmann::json::object(); },
                       [](const cls::CaseOne& x) { return nlohmann::json{{"defects", x.defects.entries}}; },
                       [](const cls::CaseTwo& x) { return nlohmann::json{{"m", x.m}}; },
                       [](const cls::CaseThree& x) {
                           return nlohmann::json{{"defects", x.defects.entries}, {"t", x.t}, {"b", x.b},
                                                 {"n", x.n}, {"u", x.u}};
                       },
                       [](const cls::Cone& x) { return nlohmann::json{{"residual", x.residual}, {"t", x.t}}; },
                       [](const cls::Truncate& x) {
                           return nlohmann::json{{"replacement", x.replacement}, {"t", x.t}, {"b", x.b}};
                       },
                   },
                   c);
    j["case"] = std::string(case_name(c));
    return j;
}

}  // namespace elq
