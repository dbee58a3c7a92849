#include "elq/system.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "elq/checked.hpp"
#include "elq/error.hpp"

namespace elq {

FatPointSystem FatPointSystem::normalized() const {
    FatPointSystem out{degree, {}};
    out.mults.reserve(mults.size());
    for (auto m : mults) {
        if (m > 0) out.mults.push_back(m);
    }
    std::sort(out.mults.begin(), out.mults.end(), std::greater<>());
    return out;
}

bool FatPointSystem::is_normalized() const noexcept {
    for (std::size_t i = 0; i < mults.size(); ++i) {
        if (mults[i] <= 0) return false;
        if (i > 0 && mults[i] > mults[i - 1]) return false;
    }
    return true;
}

std::int64_t FatPointSystem::leading_sum(std::size_t count) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < count && i < mults.size(); ++i) s = checked::add(s, mults[i]);
    return s;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw UsageError("malformed multiplicity list '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

std::vector<std::int64_t> parse_multiplicities(std::string_view text) {
    std::vector<std::int64_t> out;
    if (trim(text).empty()) return out;

    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        auto item = text.substr(start, comma - start);

        auto x = item.find_first_of("xX");
        std::int64_t value = 0;
        std::int64_t repeat = 1;
        if (x == std::string_view::npos) {
            value = parse_int(item, text);
        } else {
            value = parse_int(item.substr(0, x), text);
            repeat = parse_int(item.substr(x + 1), text);
            if (repeat < 0) throw UsageError("negative repetition count in '" + std::string(text) + "'");
            if (repeat > 1'000'000) throw UsageError("repetition count too large in '" + std::string(text) + "'");
        }
        out.insert(out.end(), static_cast<std::size_t>(repeat), value);
        start = comma + 1;
    }
    return out;
}

std::string format_multiplicities(const std::vector<std::int64_t>& mults) {
    std::ostringstream os;
    for (std::size_t i = 0; i < mults.size();) {
        std::size_t j = i;
        while (j < mults.size() && mults[j] == mults[i]) ++j;
        if (i > 0) os << ',';
        os << mults[i];
        if (j - i > 1) os << 'x' << (j - i);
        i = j;
    }
    return os.str();
}

std::string to_string(const FatPointSystem& sys) {
    std::ostringstream os;
    os << '(' << sys.degree << ';';
    const auto& m = sys.mults;
    for (std::size_t i = 0; i < m.size();) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        os << (i == 0 ? " " : ",") << m[i];
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    os << ')';
    return os.str();
}

void to_json(nlohmann::json& j, const FatPointSystem& sys) {
    j = nlohmann::json{{"d", sys.degree}, {"m", sys.mults}};
}

void from_json(const nlohmann::json& j, FatPointSystem& sys) {
    try {
        sys.degree = j.at("d").get<std::int64_t>();
        const auto& m = j.at("m");
        if (m.is_string()) {
            sys.mults = parse_multiplicities(m.get<std::string>());
        } else {
            sys.mults = m.get<std::vector<std::int64_t>>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("bad system JSON: ") + e.what());
    }
}

}  // namespace elq
