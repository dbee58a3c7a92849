#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "elq/system.hpp"

namespace elq {

namespace step {
struct Sort {};
/// Raw (3,3) transformation with k = 2d - (m_1 + ... + m_4); pads to 4 points.
struct Cremona {
    std::int64_t k = 0;
};
/// Sets the listed (0-based) multiplicities from negative to 0.
struct ClampNegative {
    std::vector<std::size_t> indices;
};
struct DropZeros {};
struct DeclaredEmpty {
    std::string reason;
};
}  // namespace step

using StepKind = std::variant<step::Sort, step::Cremona, step::ClampNegative, step::DropZeros,
                              step::DeclaredEmpty>;

struct ReductionStep {
    StepKind kind;
    FatPointSystem before;
    FatPointSystem after;
};

/// Replayable record of a `reduce_to_standard` run.
struct ReductionTrace {
    std::vector<ReductionStep> steps;

    /// Re-applies every step to `initial`; throws InternalError if any
    /// intermediate state disagrees with the recorded one.
    [[nodiscard]] FatPointSystem replay(const FatPointSystem& initial) const;
};

/// Applies one step to a system (the semantics used by `replay`).
FatPointSystem apply_step(const StepKind& kind, const FatPointSystem& sys);

/// k = 2d - (m_1 + m_2 + m_3 + m_4), with absent points counted as 0.
std::int64_t cremona_excess(const FatPointSystem& sys);

/// (d+k; max(m_1+k,0), ..., max(m_4+k,0), m_5, ..., m_r), not re-sorted.
/// The multiplicity list is zero-padded to length >= 4 first.
FatPointSystem cremona_quadruple(const FatPointSystem& sys);

/// Sorted non-increasing, all m_i >= 0 and 2d >= m_1 + m_2 + m_3 + m_4.
bool is_standard(const FatPointSystem& sys);

struct ReductionResult {
    FatPointSystem system;  ///< normalized; meaningless when `empty`
    bool empty = false;
    ReductionTrace trace;
};

/// Sort-and-transform loop: while 2d < m_1+...+m_4 and d >= m_1, apply the
/// Cremona transformation, clamp negatives, sort and drop zeros. The result is
/// either standard with d >= m_1, or flagged empty (d < 0 or d < m_1).
ReductionResult reduce_to_standard(const FatPointSystem& sys);

void to_json(nlohmann::json& j, const ReductionStep& s);
void to_json(nlohmann::json& j, const ReductionTrace& t);

}  // namespace elq
