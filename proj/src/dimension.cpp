#include "elq/dimension.hpp"

#include "elq/checked.hpp"
#include "elq/combinatorics.hpp"
#include "elq/detail/overloaded.hpp"
#include "elq/error.hpp"
#include "elq/reduction.hpp"

namespace elq {

using detail::overloaded;

std::int64_t dim_case_one(const FatPointSystem& sys) {
    const auto dim = checked::add(virtual_dim(sys), line_defects(sys).correction());
    if (dim < 0) throw InternalError("case-one formula returned " + std::to_string(dim) + " for " + to_string(sys));
    return dim;
}

std::int64_t dim_case_two(std::int64_t m) {
    if (m < 1) throw InternalError("case two needs m >= 1");
    return m;
}

std::int64_t dim_case_three(const FatPointSystem& sys, const cls::CaseThree& c) {
    const auto r = static_cast<std::int64_t>(sys.r());
    std::int64_t dim = checked::add(virtual_dim(sys), c.defects.correction());
    dim = checked::add(dim, checked::mul(r - 8, binom(c.t + 1, 3)));
    dim = checked::add(dim, checked::mul(c.n, binom(c.t + 1, 2)));
    if (dim < 0) throw InternalError("case-three formula returned " + std::to_string(dim) + " for " + to_string(sys));
    return dim;
}

DimensionResult dimension(const FatPointSystem& input) {
    DimensionResult out;
    const auto norm_input = input.normalized();
    if (input.degree >= 0) out.vdim = virtual_dim(norm_input);
    out.edim = expected_dim(norm_input);

    auto finish = [&](std::int64_t dim) {
        out.dim = dim;
        out.speciality = dim - out.edim;
        return out;
    };

    FatPointSystem cur = input;
    std::optional<std::int64_t> truncated_t;
    const std::int64_t max_passes = 2 * (std::max<std::int64_t>(input.degree, 0) / 3 + 2) + 4;

    for (std::int64_t pass = 0; pass < max_passes; ++pass) {
        auto red = reduce_to_standard(cur);
        out.trace.push_back({"reduce", cur, nlohmann::json{{"result", red.system}, {"empty", red.empty}, {"steps", red.trace}}});
        if (red.empty) {
            out.case_path.emplace_back("empty");
            out.terminal_case = cls::Empty{};
            return finish(-1);
        }
        const FatPointSystem& sys = red.system;
        auto c = classify(sys);
        out.case_path.emplace_back(case_name(c));
        out.trace.push_back({"classify", sys, classification_json(c)});

        if (truncated_t) {
            const auto* three = std::get_if<cls::CaseThree>(&c);
            const auto* cone = std::get_if<cls::Cone>(&c);
            const auto t = three ? three->t : cone ? cone->t : -1;
            if (t != *truncated_t || (three && three->b != static_cast<std::int64_t>(sys.r()))) {
                throw PreconditionViolated("truncated system " + to_string(sys) +
                                           " did not re-classify with b = r and the same t");
            }
            truncated_t.reset();
        }

        std::optional<std::int64_t> dim;
        std::visit(overloaded{
                       [&](const cls::Empty&) { dim = -1; },
                       [&](const cls::CaseOne&) { dim = dim_case_one(sys); },
                       [&](const cls::CaseTwo& x) { dim = dim_case_two(x.m); },
                       [&](const cls::CaseThree& x) { dim = dim_case_three(sys, x); },
                       [&](const cls::Truncate& x) {
                           out.trace.push_back({"truncate", sys, nlohmann::json{{"replacement", x.replacement}}});
                           truncated_t = x.t;
                           cur = x.replacement;
                       },
                       [&](const cls::Cone& x) {
                           out.trace.push_back({"cone", sys, nlohmann::json{{"residual", x.residual}}});
                           cur = x.residual;
                       },
                   },
                   c);
        if (dim) {
            out.trace.push_back({"formula", sys, nlohmann::json{{"dim", *dim}}});
            out.terminal = sys;
            out.terminal_case = c;
            return finish(*dim);
        }
    }
    throw InternalError("dimension driver exceeded its recursion cap on " + to_string(input));
}

void to_json(nlohmann::json& j, const DriverHop& h) {
    j = nlohmann::json{{"action", h.action}, {"system", h.system}, {"detail", h.detail}};
}

nlohmann::json to_json(const DimensionResult& r, bool with_trace) {
    nlohmann::json j{{"dim", r.dim},
                     {"vdim", r.vdim ? nlohmann::json(*r.vdim) : nlohmann::json(nullptr)},
                     {"edim", r.edim},
                     {"speciality", r.speciality},
                     {"case_path", r.case_path}};
    if (with_trace) j["trace"] = r.trace;
    return j;
}

}  // namespace elq
