#include "elq/reduction.hpp"

#include <algorithm>
#include <functional>

#include "elq/checked.hpp"
#include "elq/detail/overloaded.hpp"
#include "elq/error.hpp"

namespace elq {

using detail::overloaded;

namespace {

FatPointSystem padded(const FatPointSystem& sys) {
    FatPointSystem out = sys;
    if (out.mults.size() < 4) out.mults.resize(4, 0);
    return out;
}

}  // namespace

std::int64_t cremona_excess(const FatPointSystem& sys) {
    return checked::sub(checked::mul(2, sys.degree), sys.leading_sum(4));
}

FatPointSystem apply_step(const StepKind& kind, const FatPointSystem& sys) {
    return std::visit(
        overloaded{
            [&](const step::Sort&) {
                FatPointSystem out = sys;
                std::sort(out.mults.begin(), out.mults.end(), std::greater<>());
                return out;
            },
            [&](const step::Cremona& c) {
                FatPointSystem out = padded(sys);
                out.degree = checked::add(out.degree, c.k);
                for (std::size_t i = 0; i < 4; ++i) out.mults[i] = checked::add(out.mults[i], c.k);
                return out;
            },
            [&](const step::ClampNegative& c) {
                FatPointSystem out = sys;
                for (auto i : c.indices) out.mults.at(i) = 0;
                return out;
            },
            [&](const step::DropZeros&) {
                FatPointSystem out = sys;
                std::erase(out.mults, 0);
                return out;
            },
            [&](const step::DeclaredEmpty&) { return sys; },
        },
        kind);
}

FatPointSystem ReductionTrace::replay(const FatPointSystem& initial) const {
    FatPointSystem cur = initial;
    for (const auto& s : steps) {
        if (!(cur == s.before)) throw InternalError("trace replay diverged before a step");
        cur = apply_step(s.kind, cur);
        if (!(cur == s.after)) throw InternalError("trace replay diverged after a step");
    }
    return cur;
}

FatPointSystem cremona_quadruple(const FatPointSystem& sys) {
    FatPointSystem out = apply_step(step::Cremona{cremona_excess(sys)}, sys);
    for (std::size_t i = 0; i < 4; ++i) out.mults[i] = std::max<std::int64_t>(out.mults[i], 0);
    return out;
}

bool is_standard(const FatPointSystem& sys) {
    for (std::size_t i = 0; i < sys.mults.size(); ++i) {
        if (sys.mults[i] < 0) return false;
        if (i > 0 && sys.mults[i] > sys.mults[i - 1]) return false;
    }
    return cremona_excess(sys) >= 0;
}

namespace {

class TraceBuilder {
public:
    explicit TraceBuilder(FatPointSystem start) : cur_(std::move(start)) {}

    void apply(StepKind kind) {
        FatPointSystem next = apply_step(kind, cur_);
        trace_.steps.push_back({std::move(kind), cur_, next});
        cur_ = std::move(next);
    }

    // Emits the clamp/sort/drop steps only when they change something.
    void canonicalize() {
        step::ClampNegative clamp;
        for (std::size_t i = 0; i < cur_.mults.size(); ++i) {
            if (cur_.mults[i] < 0) clamp.indices.push_back(i);
        }
        if (!clamp.indices.empty()) apply(std::move(clamp));
        if (!std::is_sorted(cur_.mults.begin(), cur_.mults.end(), std::greater<>())) apply(step::Sort{});
        if (std::find(cur_.mults.begin(), cur_.mults.end(), 0) != cur_.mults.end()) apply(step::DropZeros{});
    }

    [[nodiscard]] const FatPointSystem& current() const { return cur_; }
    ReductionTrace take() { return std::move(trace_); }

private:
    FatPointSystem cur_;
    ReductionTrace trace_;
};

}  // namespace

ReductionResult reduce_to_standard(const FatPointSystem& sys) {
    TraceBuilder tb(sys);
    tb.canonicalize();

    const std::int64_t cap =
        10 * (std::max<std::int64_t>(sys.degree, 0) + static_cast<std::int64_t>(sys.r()) + 1);
    std::int64_t iterations = 0;
    while (true) {
        const auto& cur = tb.current();
        if (cur.degree < 0 || cur.degree < cur.mult(1)) break;
        const auto k = cremona_excess(cur);
        if (k >= 0) break;
        if (++iterations > cap) throw InternalError("reduction exceeded its iteration cap on " + to_string(sys));
        tb.apply(step::Cremona{k});
        tb.canonicalize();
    }

    ReductionResult result;
    const auto& last = tb.current();
    if (last.degree < 0) {
        tb.apply(step::DeclaredEmpty{"negative degree"});
        result.empty = true;
    } else if (last.degree < last.mult(1)) {
        tb.apply(step::DeclaredEmpty{"degree below the largest multiplicity"});
        result.empty = true;
    }
    result.system = tb.current();
    result.trace = tb.take();
    return result;
}

void to_json(nlohmann::json& j, const ReductionStep& s) {
    j = std::visit(overloaded{
                       [](const step::Sort&) { return nlohmann::json{{"step", "sort"}}; },
                       [](const step::Cremona& c) { return nlohmann::json{{"step", "cremona"}, {"k", c.k}}; },
                       [](const step::ClampNegative& c) {
                           return nlohmann::json{{"step", "clamp_negative"}, {"indices", c.indices}};
                       },
                       [](const step::DropZeros&) { return nlohmann::json{{"step", "drop_zeros"}}; },
                       [](const step::DeclaredEmpty& e) {
                           return nlohmann::json{{"step", "declared_empty"}, {"reason", e.reason}};
                       },
                   },
                   s.kind);
    j["before"] = s.before;
    j["after"] = s.after;
}

void to_json(nlohmann::json& j, const ReductionTrace& t) {
    j = nlohmann::json::array();
    for (const auto& s : t.steps) j.push_back(s);
}

}  // namespace elq
