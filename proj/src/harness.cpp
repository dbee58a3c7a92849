#include "elq/harness.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <functional>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "elq/dimension.hpp"
#include "elq/error.hpp"
#include "elq/modular.hpp"

namespace elq::harness {

void SweepConfig::validate() const {
    if (d_max < 1 || r_max < 1 || m_max < 1) throw UsageError("sweep bounds d_max, r_max, m_max must be positive");
    if (mode == SweepMode::Random && samples < 1) throw UsageError("random sweep needs samples >= 1");
    if (trials < 1) throw UsageError("sweep needs trials >= 1");
    if (workers < 1) throw UsageError("sweep needs workers >= 1");
    if (primes.empty()) throw UsageError("sweep needs at least one prime");
    for (auto p : primes) {
        if (!modp::is_prime(p) || p >= (1ULL << 32)) throw UsageError("sweep prime " + std::to_string(p) + " is not a prime below 2^32");
        if (p <= static_cast<std::uint64_t>(2 * d_max)) {
            throw UsageError("sweep prime " + std::to_string(p) + " must exceed 2 d_max = " + std::to_string(2 * d_max));
        }
    }
}

oracle::OracleOptions SweepConfig::oracle_options() const {
    oracle::OracleOptions opts;
    opts.primes = primes;
    opts.seeds.clear();
    for (std::int64_t i = 0; i < trials; ++i) opts.seeds.push_back(seed + static_cast<std::uint64_t>(i));
    return opts;
}

void to_json(nlohmann::json& j, const SweepConfig& c) {
    j = nlohmann::json{{"d_max", c.d_max},   {"r_max", c.r_max},   {"m_max", c.m_max},
                       {"mode", c.mode == SweepMode::Random ? "random" : "exhaustive"},
                       {"samples", c.samples}, {"primes", c.primes}, {"seed", c.seed},
                       {"trials", c.trials},   {"workers", c.workers}};
}

void from_json(const nlohmann::json& j, SweepConfig& c) {
    try {
        c = SweepConfig{};
        c.d_max = j.value("d_max", c.d_max);
        c.r_max = j.value("r_max", c.r_max);
        c.m_max = j.value("m_max", c.m_max);
        const auto mode = j.value("mode", std::string("exhaustive"));
        if (mode == "exhaustive") {
            c.mode = SweepMode::Exhaustive;
        } else if (mode == "random") {
            c.mode = SweepMode::Random;
        } else {
            throw UsageError("unknown sweep mode '" + mode + "'");
        }
        c.samples = j.value("samples", c.samples);
        if (j.contains("primes")) c.primes = j.at("primes").get<std::vector<std::uint64_t>>();
        if (j.contains("prime")) c.primes = {j.at("prime").get<std::uint64_t>()};
        c.seed = j.value("seed", c.seed);
        c.trials = j.value("trials", c.trials);
        c.workers = j.value("workers", c.workers);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("bad sweep config: ") + e.what());
    }
}

namespace {

nlohmann::json optional_json(const std::optional<std::int64_t>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::optional<std::int64_t> optional_from(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<std::int64_t>();
}

}  // namespace

void to_json(nlohmann::json& j, const VerificationRecord& r) {
    j = nlohmann::json{{"input", r.input},
                       {"formula_dim", optional_json(r.formula_dim)},
                       {"oracle_dim", optional_json(r.oracle_dim)},
                       {"case_path", r.case_path},
                       {"vdim", optional_json(r.vdim)},
                       {"edim", r.edim},
                       {"match", r.match},
                       {"stable", r.stable},
                       {"seeds", r.seeds},
                       {"primes", r.primes}};
    if (!r.error.empty()) j["error"] = r.error;
}

void from_json(const nlohmann::json& j, VerificationRecord& r) {
    r.input = j.at("input").get<FatPointSystem>();
    r.formula_dim = optional_from(j, "formula_dim");
    r.oracle_dim = optional_from(j, "oracle_dim");
    r.case_path = j.at("case_path").get<std::vector<std::string>>();
    r.vdim = optional_from(j, "vdim");
    r.edim = j.at("edim").get<std::int64_t>();
    r.match = j.at("match").get<bool>();
    r.stable = j.at("stable").get<bool>();
    r.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    r.primes = j.at("primes").get<std::vector<std::uint64_t>>();
    r.error = j.value("error", std::string());
}

VerificationRecord verify(const FatPointSystem& sys, const oracle::OracleOptions& opts) {
    VerificationRecord rec;
    rec.input = sys;
    rec.seeds = opts.seeds;
    rec.primes = opts.primes;
    rec.edim = expected_dim(sys.normalized());
    if (sys.degree >= 0) rec.vdim = virtual_dim(sys.normalized());

    try {
        const auto res = dimension(sys);
        rec.formula_dim = res.dim;
        rec.case_path = res.case_path;
    } catch (const std::exception& e) {
        rec.error = std::string("formula: ") + e.what();
    }
    try {
        const auto orc = oracle::oracle_dimension(sys, opts);
        rec.oracle_dim = orc.dim;
        rec.stable = orc.stable;
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        if (!rec.error.empty()) rec.error += "; ";
        rec.error += std::string("oracle: ") + e.what();
    }
    rec.match = rec.formula_dim && rec.oracle_dim && *rec.formula_dim == *rec.oracle_dim;
    return rec;
}

std::vector<FatPointSystem> enumerate_grid(const SweepConfig& cfg) {
    std::vector<FatPointSystem> out;
    if (cfg.mode == SweepMode::Random) {
        std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32), 0x5eedU};
        std::mt19937_64 gen(seq);
        const auto d_span = static_cast<std::uint64_t>(cfg.d_max + 1);
        const auto r_span = static_cast<std::uint64_t>(cfg.r_max + 1);
        const auto m_span = static_cast<std::uint64_t>(cfg.m_max);
        for (std::int64_t s = 0; s < cfg.samples; ++s) {
            FatPointSystem sys;
            sys.degree = static_cast<std::int64_t>(gen() % d_span);
            const auto r = gen() % r_span;
            for (std::uint64_t i = 0; i < r; ++i) sys.mults.push_back(1 + static_cast<std::int64_t>(gen() % m_span));
            std::sort(sys.mults.begin(), sys.mults.end(), std::greater<>());
            out.push_back(std::move(sys));
        }
        return out;
    }

    std::vector<std::int64_t> prefix;
    std::function<void(std::int64_t, std::size_t, std::int64_t)> extend = [&](std::int64_t d, std::size_t r,
                                                                               std::int64_t bound) {
        if (prefix.size() == r) {
            out.push_back({d, prefix});
            return;
        }
        for (std::int64_t m = 1; m <= bound; ++m) {
            prefix.push_back(m);
            extend(d, r, m);
            prefix.pop_back();
        }
    };
    for (std::int64_t d = 0; d <= cfg.d_max; ++d) {
        for (std::int64_t r = 0; r <= cfg.r_max; ++r) extend(d, static_cast<std::size_t>(r), cfg.m_max);
    }
    return out;
}

void to_json(nlohmann::json& j, const SweepSummary& s) {
    j = nlohmann::json{{"total", s.total},
                       {"matches", s.matches},
                       {"mismatches", s.mismatches},
                       {"unstable", s.unstable},
                       {"errors", s.errors}};
}

std::string csv_header() { return "d,m,formula_dim,oracle_dim,vdim,edim,match,stable,case_path,error"; }

std::string csv_row(const VerificationRecord& r) {
    auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); };
    std::ostringstream os;
    os << r.input.degree << ",\"" << format_multiplicities(r.input.mults) << "\"," << opt(r.formula_dim) << ','
       << opt(r.oracle_dim) << ',' << opt(r.vdim) << ',' << r.edim << ',' << (r.match ? "true" : "false") << ','
       << (r.stable ? "true" : "false") << ',';
    for (std::size_t i = 0; i < r.case_path.size(); ++i) os << (i ? ">" : "") << r.case_path[i];
    std::string err = r.error;
    std::replace(err.begin(), err.end(), '"', '\'');
    os << ",\"" << err << '"';
    return os.str();
}

SweepSummary run_sweep(const SweepConfig& cfg, const SweepSinks& sinks) {
    cfg.validate();
    const auto systems = enumerate_grid(cfg);
    const auto opts = cfg.oracle_options();

    std::vector<std::optional<VerificationRecord>> slots(systems.size());
    std::mutex mu;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        while (true) {
            const auto i = next.fetch_add(1);
            if (i >= systems.size()) return;
            auto rec = verify(systems[i], opts);
            {
                std::lock_guard lock(mu);
                slots[i] = std::move(rec);
            }
            ready.notify_all();
        }
    };

    std::vector<std::jthread> pool;
    const auto n_workers = static_cast<std::size_t>(std::max<std::int64_t>(1, cfg.workers));
    for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);

    if (sinks.csv) *sinks.csv << csv_header() << '\n';
    SweepSummary summary;
    // Single writer: drain slots strictly in grid order.
    for (std::size_t i = 0; i < systems.size(); ++i) {
        VerificationRecord rec;
        {
            std::unique_lock lock(mu);
            ready.wait(lock, [&] { return slots[i].has_value(); });
            rec = std::move(*slots[i]);
            slots[i].reset();
        }
        ++summary.total;
        if (!rec.error.empty()) {
            ++summary.errors;
        } else if (rec.match) {
            ++summary.matches;
        } else {
            ++summary.mismatches;
        }
        if (!rec.stable) ++summary.unstable;

        if (sinks.jsonl) {
            nlohmann::json j = rec;
            j["index"] = i;
            *sinks.jsonl << j.dump() << '\n';
        }
        if (sinks.csv) *sinks.csv << csv_row(rec) << '\n';
        if (sinks.records) sinks.records->push_back(std::move(rec));
    }
    if (sinks.jsonl) sinks.jsonl->flush();
    return summary;
}

}  // namespace elq::harness
