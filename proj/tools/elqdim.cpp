// elqdim: dimensions of linear systems of surfaces in P^3 with fat points on
// an elliptic quartic curve, with a finite-field interpolation cross-check.
//
// Exit codes: 0 ok, 1 mismatch/unstable, 2 usage, 3 internal diagnostic.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "elq/chow.hpp"
#include "elq/classification.hpp"
#include "elq/dimension.hpp"
#include "elq/error.hpp"
#include "elq/harness.hpp"
#include "elq/oracle.hpp"
#include "elq/reduction.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct SystemArgs {
    std::int64_t degree = 0;
    std::string mults;
    bool json = false;
    bool trace = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("-d,--degree", degree, "degree of the surfaces")->required();
        cmd->add_option("-m,--mults", mults, "multiplicities, e.g. 5,1x19")->default_val("");
        cmd->add_flag("--json", json, "emit JSON");
        cmd->add_flag("--trace", trace, "include the reduction/driver trace");
    }

    [[nodiscard]] elq::FatPointSystem system() const { return {degree, elq::parse_multiplicities(mults)}; }
};

struct OracleArgs {
    std::vector<std::uint64_t> primes{elq::oracle::kPrimaryPrime};
    std::uint64_t seed = 1;
    std::int64_t trials = 3;

    void attach(CLI::App* cmd) {
        cmd->add_option("--prime", primes, "prime field(s) for the oracle")->default_val(elq::oracle::kPrimaryPrime);
        cmd->add_option("--seed", seed, "first curve seed")->default_val(1);
        cmd->add_option("--trials", trials, "number of seeds (seed, seed+1, ...)")->default_val(3);
    }

    [[nodiscard]] elq::oracle::OracleOptions options() const {
        if (trials < 1) throw elq::UsageError("--trials must be >= 1");
        elq::oracle::OracleOptions opts;
        opts.primes = primes;
        opts.seeds.clear();
        for (std::int64_t i = 0; i < trials; ++i) opts.seeds.push_back(seed + static_cast<std::uint64_t>(i));
        return opts;
    }
};

void print(const nlohmann::json& j, bool json, const std::string& text) {
    if (json) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << text << '\n';
    }
}

std::map<int, std::int64_t> parse_lines(const std::string& text) {
    std::map<int, std::int64_t> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        const auto item = text.substr(start, comma - start);
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw elq::UsageError("--lines entries look like index:mult, got '" + item + "'");
        try {
            out[std::stoi(item.substr(0, colon))] = std::stoll(item.substr(colon + 1));
        } catch (const std::logic_error&) {
            throw elq::UsageError("malformed --lines entry '" + item + "'");
        }
        start = comma + 1;
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Dimensions of linear systems with fat points on an elliptic quartic curve"};
    app.require_subcommand(1);

    SystemArgs dim_args;
    auto* dim_cmd = app.add_subcommand("dim", "exact dimension via reduction and the closed formulas");
    dim_args.attach(dim_cmd);

    SystemArgs cls_args;
    auto* cls_cmd = app.add_subcommand("classify", "reduce to standard form and report the case");
    cls_args.attach(cls_cmd);

    auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic by Riemann-Roch on a blow-up");
    std::int64_t chi_d = 0;
    std::string chi_m;
    std::string chi_lines;
    std::int64_t chi_curve = 0;
    int chi_r = -1;
    bool chi_json = false;
    chi_cmd->add_option("-d,--d", chi_d, "coefficient of H")->required();
    chi_cmd->add_option("-m,--m", chi_m, "multiplicities m_i (coefficient -m_i of E_i)")->default_val("");
    chi_cmd->add_option("--lines", chi_lines, "blown-up lines with coefficients, e.g. 2:1,5:2");
    auto* curve_opt = chi_cmd->add_option("--curve", chi_curve, "blow up the curve; coefficient -t of F");
    chi_cmd->add_option("--r", chi_r, "number of points (default: length of -m)");
    chi_cmd->add_flag("--json", chi_json, "emit JSON");

    SystemArgs orc_args;
    OracleArgs orc_opts;
    auto* orc_cmd = app.add_subcommand("oracle", "dimension from the interpolation matrix over F_p");
    orc_args.attach(orc_cmd);
    orc_opts.attach(orc_cmd);

    SystemArgs ver_args;
    OracleArgs ver_opts;
    auto* ver_cmd = app.add_subcommand("verify", "compare the formula with the oracle");
    ver_args.attach(ver_cmd);
    ver_opts.attach(ver_cmd);

    auto* sweep_cmd = app.add_subcommand("sweep", "batch verification over a grid");
    std::string sweep_config;
    std::string sweep_out;
    std::string sweep_csv;
    std::int64_t sweep_workers = 0;
    sweep_cmd->add_option("--config", sweep_config, "sweep config JSON")->required();
    sweep_cmd->add_option("--out", sweep_out, "JSONL output path (default stdout)");
    sweep_cmd->add_option("--csv", sweep_csv, "optional CSV export path");
    sweep_cmd->add_option("--workers", sweep_workers, "override worker count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (dim_cmd->parsed()) {
        const auto sys = dim_args.system();
        const auto res = elq::dimension(sys);
        std::string text = "dim " + std::to_string(res.dim) + "  edim " + std::to_string(res.edim) + "  speciality " +
                           std::to_string(res.speciality) + "  path";
        for (const auto& c : res.case_path) text += " " + c;
        if (dim_args.trace)
            for (const auto& hop : res.trace) text += "\n  " + hop.action + " " + elq::to_string(hop.system);
        print(elq::to_json(res, dim_args.trace), dim_args.json, text);
        return 0;
    }

    if (cls_cmd->parsed()) {
        const auto sys = cls_args.system();
        const auto red = elq::reduce_to_standard(sys);
        nlohmann::json j;
        if (red.empty) {
            j = elq::classification_json(elq::cls::Empty{});
        } else {
            j = elq::classification_json(elq::classify(red.system));
        }
        j["reduced"] = red.system;
        std::string text = j["case"].get<std::string>() + "  reduced " + elq::to_string(red.system);
        if (cls_args.trace) {
            j["trace"] = red.trace;
            for (const auto& step : red.trace.steps)
                text += "\n  " + nlohmann::json(step)["step"].get<std::string>() + " " + elq::to_string(step.before) +
                        " -> " + elq::to_string(step.after);
        }
        print(j, cls_args.json, text);
        return 0;
    }

    if (chi_cmd->parsed()) {
        const auto mults = elq::parse_multiplicities(chi_m);
        const int r = chi_r >= 0 ? chi_r : static_cast<int>(mults.size());
        const auto lines = parse_lines(chi_lines);
        std::vector<int> idx;
        for (const auto& kv : lines) idx.push_back(kv.first);
        const bool curve = curve_opt->count() > 0;
        const auto amb = curve ? elq::chow::AmbientSpace::with_lines_and_curve(r, idx)
                               : elq::chow::AmbientSpace::with_lines(r, idx);
        const auto d = elq::chow::DivisorClass::from_system(amb, chi_d, mults, lines, curve ? chi_curve : 0);
        const auto e = elq::chow::euler_characteristic(d, amb);
        nlohmann::json j{{"chi", e.chi}, {"bracket", e.bracket}, {"c2_dot_d", e.c2_dot_d}};
        print(j, chi_json, "chi " + std::to_string(e.chi));
        return 0;
    }

    if (orc_cmd->parsed()) {
        const auto res = elq::oracle::oracle_dimension(orc_args.system(), orc_opts.options());
        nlohmann::json j = res;
        print(j, orc_args.json,
              "dim " + std::to_string(res.dim) + (res.stable ? "  (stable)" : "  (UNSTABLE across trials)"));
        return res.stable ? 0 : kExitMismatch;
    }

    if (ver_cmd->parsed()) {
        const auto rec = elq::harness::verify(ver_args.system(), ver_opts.options());
        nlohmann::json j = rec;
        if (!rec.error.empty() && !ver_args.json) std::cerr << rec.error << '\n';
        auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("n/a"); };
        print(j, ver_args.json,
              "formula " + opt(rec.formula_dim) + "  oracle " + opt(rec.oracle_dim) +
                  (rec.match ? "  match" : "  MISMATCH") + (rec.stable ? "" : "  UNSTABLE"));
        if (!rec.error.empty()) return kExitInternal;
        return rec.match && rec.stable ? 0 : kExitMismatch;
    }

    if (sweep_cmd->parsed()) {
        std::ifstream in(sweep_config);
        if (!in) throw elq::UsageError("cannot read config '" + sweep_config + "'");
        elq::harness::SweepConfig cfg;
        try {
            cfg = nlohmann::json::parse(in).get<elq::harness::SweepConfig>();
        } catch (const nlohmann::json::parse_error& e) {
            throw elq::UsageError(std::string("config is not valid JSON: ") + e.what());
        }
        if (sweep_workers > 0) cfg.workers = sweep_workers;
        cfg.validate();

        std::ofstream out_file;
        std::ofstream csv_file;
        elq::harness::SweepSinks sinks;
        if (!sweep_out.empty()) {
            out_file.open(sweep_out);
            if (!out_file) throw elq::UsageError("cannot open '" + sweep_out + "' for writing");
            sinks.jsonl = &out_file;
        } else {
            sinks.jsonl = &std::cout;
        }
        if (!sweep_csv.empty()) {
            csv_file.open(sweep_csv);
            if (!csv_file) throw elq::UsageError("cannot open '" + sweep_csv + "' for writing");
            sinks.csv = &csv_file;
        }
        const auto summary = elq::harness::run_sweep(cfg, sinks);
        nlohmann::json j = summary;
        (sweep_out.empty() ? std::cerr : std::cout) << j.dump() << '\n';
        return summary.ok() ? 0 : kExitMismatch;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const elq::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const elq::PreconditionViolated& e) {
        std::cerr << "diagnostic: " << e.what() << '\n';
        return kExitInternal;
    } catch (const elq::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
}
