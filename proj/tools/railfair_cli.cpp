// Command-line front door: scenario generation, single optimization runs,
// alpha sweeps, and scenario-by-index comparison studies.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "railfair/experiments.hpp"
#include "railfair/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

struct ValidationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

railfair::Scenario load_valid_scenario(const std::string& path) {
    railfair::Scenario s = railfair::load_scenario(path);
    const auto violations = railfair::validate_scenario(s);
    if (!violations.empty()) {
        std::ostringstream os;
        os << "scenario validation failed:\n";
        for (const auto& v : violations) os << "  - " << v << "\n";
        throw ValidationFailure(os.str());
    }
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fairness-oriented railway capacity allocation toolkit"};
    app.require_subcommand(1);

    std::string kind = "balanced";
    std::string scenario_path;
    std::string index = "jain";
    double alpha = -1.0; // <0 means "use the per-index default"
    double epsilon = 0.5;
    int epochs = 100;
    int pop = 64;
    int runs = 5;
    std::uint64_t seed = 1;
    std::string out = ".";

    auto* generate = app.add_subcommand("generate", "Write a scenario file");
    generate->add_option("--kind", kind, "balanced|semi|unbalanced")
        ->default_val("balanced");
    generate->add_option("--seed", seed, "Generator seed")->default_val(1);
    generate->add_option("--out", out, "Output scenario path")->required();

    auto* optimize = app.add_subcommand("optimize", "Run one GA optimization");
    optimize->add_option("--scenario", scenario_path, "Scenario file")->required();
    optimize->add_option("--index", index, "jain|gini|atkinson|revenue")
        ->default_val("jain");
    optimize->add_option("--alpha", alpha, "Sensitivity exponent (default 25, Gini 10)");
    optimize->add_option("--epsilon", epsilon, "Atkinson aversion")->default_val(0.5);
    optimize->add_option("--epochs", epochs, "Optimization epochs")->default_val(100);
    optimize->add_option("--pop", pop, "Population size")->default_val(64);
    optimize->add_option("--seed", seed, "GA seed")->default_val(1);
    optimize->add_option("--out", out, "Output directory")->default_val(".");

    auto* alpha_study = app.add_subcommand("alpha-study", "Sweep alpha values");
    alpha_study->add_option("--scenario", scenario_path, "Scenario file")->required();
    alpha_study->add_option("--index", index, "jain|gini|atkinson")
        ->default_val("jain");
    alpha_study->add_option("--epsilon", epsilon, "Atkinson aversion")->default_val(0.5);
    alpha_study->add_option("--epochs", epochs, "Optimization epochs")->default_val(100);
    alpha_study->add_option("--pop", pop, "Population size")->default_val(64);
    alpha_study->add_option("--runs", runs, "Runs per alpha")->default_val(5);
    alpha_study->add_option("--seed", seed, "Base seed; run r uses seed + r")
        ->default_val(1);
    alpha_study->add_option("--out", out, "Output directory")->default_val(".");

    auto* compare = app.add_subcommand(
        "compare", "Scenario kinds x fairness indices comparison grid");
    compare->add_option("--epochs", epochs, "Optimization epochs")->default_val(100);
    compare->add_option("--pop", pop, "Population size")->default_val(64);
    compare->add_option("--runs", runs, "Runs per cell")->default_val(5);
    compare->add_option("--seed", seed, "Base seed; run r uses seed + r")
        ->default_val(1);
    compare->add_option("--out", out, "Output directory")->default_val(".");

    CLI11_PARSE(app, argc, argv);

    try {
        namespace fs = std::filesystem;
        using namespace railfair;

        if (generate->parsed()) {
            save_scenario(make_scenario(scenario_kind_from_string(kind), seed), out);
            std::cout << "wrote " << out << "\n";
            return kExitOk;
        }

        GaConfig ga;
        ga.epochs = epochs;
        ga.population_size = pop;
        ga.seed = seed;

        if (optimize->parsed()) {
            const Scenario s = load_valid_scenario(scenario_path);
            FairnessConfig cfg;
            cfg.index_kind = index_kind_from_string(index);
            cfg.alpha = alpha >= 1.0 ? alpha : FairnessConfig::default_alpha(cfg.index_kind);
            cfg.epsilon = epsilon;
            const RunOutput result = run_once(s, cfg, ga, 1);
            fs::create_directories(out);
            write_text_file((fs::path(out) / "run_record.csv").string(),
                            run_records_to_csv({result.record}));
            write_text_file((fs::path(out) / "epochs.csv").string(),
                            epoch_history_to_csv(result.history));
            std::cout << "inequity=" << result.record.inequity_percent
                      << " revenue=" << result.record.revenue
                      << " scheduled=" << result.record.scheduled_train_count << "\n";
            return kExitOk;
        }

        if (alpha_study->parsed()) {
            const Scenario s = load_valid_scenario(scenario_path);
            const std::vector<double> alphas{1, 5, 10, 25, 50};
            const auto rows = railfair::alpha_study(
                s, index_kind_from_string(index), epsilon, alphas, ga, runs, seed);
            fs::create_directories(out);
            write_text_file((fs::path(out) / "alpha_study.csv").string(),
                            alpha_study_to_csv(rows));
            std::cout << alpha_study_to_csv(rows);
            return kExitOk;
        }

        if (compare->parsed()) {
            const std::vector<ScenarioKind> kinds{ScenarioKind::Balanced,
                                                  ScenarioKind::SemiBalanced,
                                                  ScenarioKind::Unbalanced};
            const std::vector<IndexKind> indices{IndexKind::Jain, IndexKind::Gini,
                                                 IndexKind::Atkinson,
                                                 IndexKind::RevenueOnly};
            const auto cells = compare_grid(kinds, indices, ga, runs, seed);
            fs::create_directories(out);
            write_text_file((fs::path(out) / "compare.csv").string(),
                            compare_to_csv(cells));
            std::cout << compare_to_csv(cells);
            return kExitOk;
        }
    } catch (const ValidationFailure& e) {
        std::cerr << e.what();
        return kExitValidation;
    } catch (const railfair::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
