#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "elq/oracle.hpp"
#include "elq/system.hpp"

namespace elq::harness {

enum class SweepMode { Exhaustive, Random };

struct SweepConfig {
    std::int64_t d_max = 5;
    std::int64_t r_max = 10;
    std::int64_t m_max = 3;
    SweepMode mode = SweepMode::Exhaustive;
    std::int64_t samples = 100;  ///< random mode only
    std::vector<std::uint64_t> primes{oracle::kPrimaryPrime};
    std::uint64_t seed = 1;
    std::int64_t trials = 3;  ///< oracle seeds seed, seed+1, ...
    std::int64_t workers = 1;

    /// Throws UsageError on non-positive bounds, non-prime primes or p <= 2 d_max.
    void validate() const;
    [[nodiscard]] oracle::OracleOptions oracle_options() const;
};

void to_json(nlohmann::json& j, const SweepConfig& c);
void from_json(const nlohmann::json& j, SweepConfig& c);

struct VerificationRecord {
    FatPointSystem input;
    std::optional<std::int64_t> formula_dim;
    std::optional<std::int64_t> oracle_dim;
    std::vector<std::string> case_path;
    std::optional<std::int64_t> vdim;
    std::int64_t edim = -1;
    bool match = false;
    bool stable = true;
    std::vector<std::uint64_t> seeds;
    std::vector<std::uint64_t> primes;
    std::string error;  ///< non-empty when either path threw
};

void to_json(nlohmann::json& j, const VerificationRecord& r);
void from_json(const nlohmann::json& j, VerificationRecord& r);

/// Runs the dimension driver and the oracle on one system.
VerificationRecord verify(const FatPointSystem& sys, const oracle::OracleOptions& opts);

/// Systems in deterministic order. Exhaustive: d = 0..d_max, r = 0..r_max,
/// non-increasing sequences in [1, m_max]^r in lexicographic order. Random:
/// `samples` seeded draws, each sorted non-increasing.
std::vector<FatPointSystem> enumerate_grid(const SweepConfig& cfg);

struct SweepSummary {
    std::int64_t total = 0;
    std::int64_t matches = 0;
    std::int64_t mismatches = 0;
    std::int64_t unstable = 0;
    std::int64_t errors = 0;

    [[nodiscard]] bool ok() const noexcept { return mismatches == 0 && errors == 0; }
};

void to_json(nlohmann::json& j, const SweepSummary& s);

struct SweepSinks {
    std::ostream* jsonl = nullptr;
    std::ostream* csv = nullptr;
    std::vector<VerificationRecord>* records = nullptr;
};

/// Verifies every grid system on `cfg.workers` threads; records reach the
/// sinks in grid order, one JSON object per line.
SweepSummary run_sweep(const SweepConfig& cfg, const SweepSinks& sinks);

std::string csv_header();
std::string csv_row(const VerificationRecord& r);

}  // namespace elq::harness
