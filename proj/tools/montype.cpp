// montype: exact type invariants, Nullstellensatz exponents, and arc
// probing for monomial and polynomial ideal files.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "montype/errors.hpp"
#include "montype/ideal_io.hpp"
#include "montype/report.hpp"

namespace fs = std::filesystem;
using namespace montype;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitTheoremViolation = 4;
constexpr int kExitOther = 1;

struct Options {
    std::string file;
    std::string batch_dir;
    bool json = false;
    bool oracle = false;
    std::string oracle_config;
    std::uint64_t seed = 1;
    int weight_bound = 6;
    int truncation = 64;
};

OracleConfig load_oracle_config(const std::string& path) {
    OracleConfig cfg;
    if (path.empty()) return cfg;
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open oracle config '" + path + "'");
    nlohmann::json doc = nlohmann::json::parse(in);
    cfg.weight_bound = doc.at("weight_bound").get<int>();
    cfg.dimension_cap = doc.at("dimension_cap").get<int>();
    cfg.entry_caps = doc.at("entry_caps").get<std::vector<int>>();
    cfg.seed = doc.at("seed").get<std::uint64_t>();
    return cfg;
}

struct RunResult {
    json doc;
    int exit_code = kExitOk;
};

void attach_oracle(json& doc, const MonomialIdeal& I, const Options& opt) {
    if (!opt.oracle) return;
    doc["oracle"] = oracle_json(cross_check(I, load_oracle_config(opt.oracle_config)));
}

RunResult run_type(const IdealFile& file, const Options& opt) {
    MonomialIdeal I = file.monomial_ideal();
    TypeReport report = type_m_primary(I);
    json doc = type_report_json(file, report, 2 * report.value);
    attach_oracle(doc, I, opt);
    return {doc, kExitOk};
}

RunResult run_ttype(const IdealFile& file, const Options& opt) {
    MonomialIdeal I = file.monomial_ideal();
    TypeReport report = ttype(I);
    json doc = ttype_report_json(file, report, dim_zero_locus(I));
    attach_oracle(doc, I, opt);
    return {doc, kExitOk};
}

RunResult run_nss(const IdealFile& file, const Options& opt) {
    MonomialIdeal I = file.monomial_ideal();
    NssReport report = nss_report(I);
    json doc = nss_report_json(file, report);
    attach_oracle(doc, I, opt);
    // A failed theorem check is an implementation bug surfaced to the
    // caller with its counterexample, never a result.
    int code = kExitOk;
    if (!report.inclusion_holds || !report.bs_holds || !report.geometric_ok)
        code = kExitTheoremViolation;
    return {doc, code};
}

RunResult run_probe(const IdealFile& file, const Options& opt) {
    PolynomialIdeal ideal = file.polynomial_ideal();
    ProbeStrategy strategy;
    strategy.weight_bound = opt.weight_bound;
    strategy.truncation = opt.truncation;
    strategy.seed = opt.seed;
    ProbeResult result = probe_type(ideal, strategy);
    std::string status = "lower-bound";
    if (file.all_monomial()) {
        MonomialIdeal I = file.monomial_ideal();
        if (I.is_proper_nonzero() && is_m_primary(I) &&
            result.lower_bound == type_m_primary(I).value)
            status = "exact";
    }
    return {probe_report_json(file, result, status, strategy), kExitOk};
}

RunResult run_curves(const IdealFile& file, const Options& opt) {
    MonomialIdeal I = file.monomial_ideal();
    TypeReport report = ttype(I);
    std::vector<Arc> arcs = witness_curves(report, opt.seed);
    return {curves_report_json(file, report, arcs, opt.seed), kExitOk};
}

using Runner = RunResult (*)(const IdealFile&, const Options&);

RunResult run_on_file(Runner runner, const std::string& path, const Options& opt) {
    IdealFile file = parse_ideal_path(path);
    return runner(file, opt);
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return kExitParse;
    if (dynamic_cast<const TheoremViolationError*>(&e)) return kExitTheoremViolation;
    if (dynamic_cast<const PreconditionError*>(&e)) return kExitPrecondition;
    if (dynamic_cast<const DimensionMismatchError*>(&e)) return kExitPrecondition;
    return kExitOther;
}

int emit(const RunResult& result, const Options& opt, double elapsed_ms) {
    if (opt.json) {
        std::cout << result.doc.dump(2) << "\n";
    } else {
        std::cout << render_text(result.doc);
        std::cout << "elapsed: " << elapsed_ms << " ms\n";
    }
    return result.exit_code;
}

int run_batch(Runner runner, const Options& opt, const std::string& command) {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(opt.batch_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".ideal")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::cerr << "no .ideal files in " << opt.batch_dir << "\n";
        return kExitPrecondition;
    }

    std::vector<std::future<RunResult>> futures;
    for (const auto& path : files)
        futures.push_back(std::async(std::launch::async, [&, path] {
            return run_on_file(runner, path, opt);
        }));

    int worst = kExitOk;
    json batch = json::array();
    for (std::size_t i = 0; i < files.size(); ++i) {
        json entry{{"file", files[i]}};
        try {
            RunResult r = futures[i].get();
            entry["report"] = r.doc;
            entry["exit_code"] = r.exit_code;
            worst = std::max(worst, r.exit_code);
            if (!opt.json) {
                std::cout << "=== " << files[i] << "\n";
                std::cout << render_text(r.doc);
            }
        } catch (const std::exception& e) {
            int code = exit_code_for(e);
            entry["error"] = e.what();
            entry["exit_code"] = code;
            worst = std::max(worst, code);
            if (!opt.json)
                std::cout << "=== " << files[i] << "\nerror: " << e.what() << "\n";
        }
        batch.push_back(std::move(entry));
    }
    if (opt.json) {
        json doc{{"schema_version", kReportSchemaVersion},
                 {"command", command},
                 {"batch", batch}};
        std::cout << doc.dump(2) << "\n";
    }
    return worst;
}

int dispatch(Runner runner, const Options& opt, const std::string& command) {
    try {
        if (!opt.batch_dir.empty()) return run_batch(runner, opt, command);
        auto start = std::chrono::steady_clock::now();
        RunResult result = run_on_file(runner, opt.file, opt);
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        return emit(result, opt, ms);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

void add_common(CLI::App* cmd, Options& opt, bool with_probe_flags) {
    cmd->add_option("file", opt.file, "ideal file (ring header + one generator per line)");
    cmd->add_option("--batch", opt.batch_dir, "run on every .ideal file in a directory")
        ->check(CLI::ExistingDirectory);
    cmd->add_flag("--json", opt.json, "emit the machine-readable report document");
    cmd->add_flag("--oracle", opt.oracle, "run the brute-force cross-check alongside");
    cmd->add_option("--oracle-config", opt.oracle_config,
                    "JSON file with oracle enumeration bounds");
    cmd->add_option("--seed", opt.seed, "seed for generic coefficient draws");
    if (with_probe_flags) {
        cmd->add_option("--weight-bound", opt.weight_bound, "largest arc weight enumerated");
        cmd->add_option("--trunc", opt.truncation, "initial jet truncation");
    }
    cmd->callback([cmd, &opt] {
        if (opt.file.empty() && opt.batch_dir.empty())
            throw CLI::ValidationError(cmd->get_name(), "needs a file or --batch directory");
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact D'Angelo-style type invariants and effective "
                 "Nullstellensatz checks for monomial ideals"};
    app.require_subcommand(1);

    Options opt;
    struct Sub {
        const char* name;
        const char* help;
        Runner runner;
        bool probe_flags;
    };
    const std::vector<Sub> subs = {
        {"type", "T of an m-primary monomial ideal, with witnesses", run_type, false},
        {"ttype", "Nullstellensatz invariant of a monomial ideal", run_ttype, false},
        {"nss", "effective Nullstellensatz exponent and verifications", run_nss, false},
        {"probe", "certified arc-enumeration lower bound for T", run_probe, true},
        {"curves", "witness curves with verified pullback orders", run_curves, false},
    };

    int exit_code = kExitOther;
    for (const auto& sub : subs) {
        CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
        add_common(cmd, opt, sub.probe_flags);
        cmd->final_callback([&, runner = sub.runner, name = std::string(sub.name)] {
            exit_code = dispatch(runner, opt, name);
        });
    }

    CLI11_PARSE(app, argc, argv);
    return exit_code;
}
