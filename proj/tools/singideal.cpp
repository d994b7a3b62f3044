#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "singideal/cli.hpp"

using namespace singideal;

namespace {

void add_input_options(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--group", config.group_spec, "group spec: inline JSON or path")->required();
    cmd->add_option("--family", config.family_spec, "family spec: inline JSON or path")->required();
    cmd->add_flag("--no-auto-close{false}", config.auto_close,
                  "reject families that are not conjugation-invariant");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Singular-ideal analogues for finite groups and their coset groupoids"};
    app.require_subcommand(1);

    RunConfig config;
    app.add_option("--out", config.output, "write the JSON report here instead of stdout");
    app.add_option("--max-group-order", config.order_cap, "cap on constructed group orders")
        ->capture_default_str();

    auto* analyze = app.add_subcommand("analyze", "kernel dimensions, witness and class-I verdict");
    add_input_options(analyze, config);

    auto* atlas = app.add_subcommand("ai-atlas", "span test vs subgroup criterion over abelian groups");
    atlas->add_option("--max-order", config.max_order, "largest group order (at most 64)")
        ->capture_default_str();

    auto* hls = app.add_subcommand("hls", "truncated non-Hausdorff groupoid and singular lift");
    add_input_options(hls, config);
    hls->add_option("--depth", config.depth, "number of finite levels")->capture_default_str();

    auto* normcheck = app.add_subcommand("normcheck", "numerical check of the compression norm equation");
    add_input_options(normcheck, config);
    normcheck->add_option("--trials", config.trials, "random functions per unit subset")->capture_default_str();
    normcheck->add_option("--seed", config.seed, "mt19937_64 seed")->capture_default_str();
    normcheck->add_option("--tol", config.tol, "pass threshold for the residual")->capture_default_str();
    normcheck->add_option("--subsets", config.subsets,
                          "unit subsets as a JSON array of arrays (default: singletons and pairs)");

    auto* witness = app.add_subcommand("witness", "print the integer witness only");
    add_input_options(witness, config);

    for (auto* sub : {analyze, atlas, hls, normcheck, witness}) {
        sub->add_option("--out", config.output, "write the JSON report here instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_parse_error;
    }

    if (analyze->parsed()) config.command = Command::analyze;
    if (atlas->parsed()) config.command = Command::ai_atlas;
    if (hls->parsed()) config.command = Command::hls;
    if (normcheck->parsed()) config.command = Command::normcheck;
    if (witness->parsed()) config.command = Command::witness;

    const CommandResult result = run(config);
    const std::string text = serialize(result.report);
    if (config.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(config.output);
        if (!out) {
            std::cerr << "cannot write " << config.output << "\n";
            return exit_parse_error;
        }
        out << text;
    }
    if (result.report.contains("error")) std::cerr << result.report["message"].get<std::string>() << "\n";
    return result.exit_code;
}
