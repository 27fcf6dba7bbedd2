// Command-line front end: ddae analyze FILE [options]

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "ddae/driver.hpp"
#include "ddae/dsl.hpp"
#include "ddae/oracle.hpp"
#include "ddae/pantelides.hpp"

namespace {

enum Exit { kOk = 0, kSingular = 2, kInputError = 3, kBudget = 4, kUsage = 5, kOracleDisagrees = 6 };

struct CliConfig {
    std::string input_path;
    std::string mode = "ddae";
    std::string format = "text";
    bool oracle_verify = false;
    std::string emit_dot;
    std::size_t max_steps = 0;
};

int run(const CliConfig& cfg) {
    std::ifstream in(cfg.input_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << cfg.input_path << "\n";
        return kInputError;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    ddae::System sys;
    try {
        sys = ddae::parse(buf.str());
    } catch (const ddae::ParseError& e) {
        std::cerr << cfg.input_path << ":" << e.what() << "\n";
        return kInputError;
    }

    ddae::AnalysisOptions opts;
    opts.step_budget = cfg.max_steps;
    std::map<std::string, std::string> dumps;
    if (!cfg.emit_dot.empty())
        opts.on_stage = [&](const std::string& stage, const ddae::GraphView& view, const ddae::Matching* m) {
            dumps[stage] = ddae::to_dot(view, m ? ddae::matched_positions(view.graph, *m)
                                                : std::vector<std::pair<std::size_t, std::size_t>>{});
        };

    const bool dae = cfg.mode == "dae";
    ddae::AnalysisResult res;
    try {
        res = dae ? ddae::analyze_dae(sys, opts) : ddae::analyze_ddae(sys, opts);
    } catch (const ddae::DelayedOccurrencePresent& e) {
        std::cerr << cfg.input_path << ": " << e.what() << " (use --mode ddae)\n";
        return kInputError;
    }

    if (!cfg.emit_dot.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(cfg.emit_dot, ec);
        for (const auto& [stage, dot] : dumps) {
            std::ofstream out(std::filesystem::path(cfg.emit_dot) / (stage + ".dot"));
            out << dot;
            if (!out) {
                std::cerr << "error: cannot write graphs to " << cfg.emit_dot << "\n";
                return kUsage;
            }
        }
    }

    std::cout << ddae::render_report(res, cfg.format == "json" ? ddae::ReportFormat::Json : ddae::ReportFormat::Text);

    if (cfg.oracle_verify) {
        auto rel = dae ? ddae::RelationKind::EqualDAE : ddae::RelationKind::EqualDDAE;
        try {
            bool brute = ddae::brute_singular(sys, rel).has_value();
            bool fast = ddae::precheck(sys, rel).has_value();
            if (brute != fast) {
                std::cerr << "oracle disagreement: subset enumeration says " << (brute ? "singular" : "nonsingular")
                          << ", matching precheck says " << (fast ? "singular" : "nonsingular") << "\n";
                return kOracleDisagrees;
            }
        } catch (const ddae::TooLarge& e) {
            std::cerr << "warning: oracle skipped: " << e.what() << "\n";
        }
    }

    switch (res.status) {
    case ddae::Status::Ok: return kOk;
    case ddae::Status::StructurallySingular: return kSingular;
    case ddae::Status::StepBudgetExceeded:
        std::cerr << "error: " << res.detail << "\n";
        return kBudget;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structural shift and differentiation analysis for delay DAEs"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto* analyze = app.add_subcommand("analyze", "Analyze a system file");
    analyze->add_option("file", cfg.input_path, "System file")->required();
    analyze->add_option("--mode", cfg.mode, "dae or ddae")->check(CLI::IsMember({"dae", "ddae"}))->capture_default_str();
    analyze->add_option("--format", cfg.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    analyze->add_flag("--oracle-verify", cfg.oracle_verify, "Cross-check the precheck by subset enumeration");
    analyze->add_option("--emit-dot", cfg.emit_dot, "Write one DOT graph per stage into DIR");
    analyze->add_option("--max-steps", cfg.max_steps, "Failed-search budget per step (0 = default)")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    return run(cfg);
}
