#include "elq/combinatorics.hpp"

#include <algorithm>
#include <limits>

#include "elq/checked.hpp"
#include "elq/error.hpp"

namespace elq {

namespace {
__extension__ using wide_int = __int128;
}  // namespace

std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || n < k) return 0;
    k = std::min(k, n - k);
    wide_int acc = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        acc = acc * (n - i) / (i + 1);
        if (acc > std::numeric_limits<std::int64_t>::max()) {
            throw InternalError("binomial coefficient overflows 64 bits");
        }
    }
    return static_cast<std::int64_t>(acc);
}

std::int64_t virtual_dim(const FatPointSystem& sys) {
    if (sys.degree < 0) throw UsageError("virtual dimension needs a non-negative degree");
    std::int64_t v = checked::sub(binom(checked::add(sys.degree, 3), 3), 1);
    for (auto m : sys.mults) v = checked::sub(v, binom(checked::add(m, 2), 3));
    return v;
}

std::int64_t expected_dim(const FatPointSystem& sys) {
    if (sys.degree < 0) return -1;
    return std::max<std::int64_t>(-1, virtual_dim(sys));
}

std::int64_t anticanonical_degree(const FatPointSystem& sys) {
    std::int64_t c = checked::mul(4, sys.degree);
    for (auto m : sys.mults) c = checked::sub(c, m);
    return c;
}

std::vector<int> DefectVector::support() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] > 0) out.push_back(static_cast<int>(i + 1));
    }
    return out;
}

std::int64_t DefectVector::correction() const {
    std::int64_t s = 0;
    for (auto t : entries) s = checked::add(s, binom(checked::add(t, 1), 3));
    return s;
}

DefectVector line_defects(const FatPointSystem& sys) {
    DefectVector out;
    const auto r = sys.r();
    out.entries.resize(r, 0);
    if (r == 0) return out;
    const auto d = sys.degree;
    if (r >= 3) out.entries[0] = std::max<std::int64_t>(0, sys.mults[1] + sys.mults[2] - d);
    for (std::size_t i = 1; i < r; ++i) {
        out.entries[i] = std::max<std::int64_t>(0, sys.mults[0] + sys.mults[i] - d);
    }
    return out;
}

}  // namespace elq
