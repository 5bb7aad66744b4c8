#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace cli = tagdecay::cli;

int main(int argc, char** argv) {
    CLI::App app{"Exponential interest-decay modeling over tagging-event logs"};
    app.require_subcommand(1);

    cli::FitOptions fit;
    auto* fit_cmd = app.add_subcommand(
        "fit", "Estimate the tedium coefficient from an event log");
    fit_cmd->add_option("--input", fit.input, "Event log path")->required();
    fit_cmd->add_option("--format", fit.format, "Input format: csv, jsonl or auto (default)")
        ->check(CLI::IsMember({"csv", "jsonl", "auto"}));
    fit_cmd->add_option("--user", fit.user, "User id to fit")->required();
    fit_cmd->add_option("--scope", fit.scope,
                        "Usage scope: a tag, tag:<t>, or ontology:<id>")
        ->required();
    fit_cmd->add_option("--bin", fit.bin, "Bin width (suffix s/h/d/w; bare seconds)")
        ->required();
    fit_cmd->add_option("--method", fit.method, "Estimator: loglinear or nonlinear")
        ->required();
    fit_cmd->add_option("--output", fit.output, "Fit JSON destination ('-' = stdout)");

    cli::SimulateOptions sim;
    auto* sim_cmd = app.add_subcommand(
        "simulate", "Generate a synthetic tagging cohort with known decay parameters");
    sim_cmd->add_option("--users", sim.users, "Number of users (default 20)");
    sim_cmd->add_option("--days", sim.days, "Horizon in days (default 150)");
    sim_cmd->add_option("--lambda0", sim.lambda0_per_day,
                        "Base event rate per day at interest 1 (default 10)");
    sim_cmd->add_option("--m-range", sim.m_range,
                        "Tedium coefficient range a:b, per day (default 0.02:0.1)");
    sim_cmd->add_option("--x0-range", sim.x0_range,
                        "Initial interest range a:b (default 1:5)");
    sim_cmd->add_option("--tags-per-user", sim.tags_per_user,
                        "Vocabulary size per user (default 5)");
    sim_cmd->add_option("--seed", sim.seed, "Simulation seed (default 42)");
    sim_cmd->add_option("--out-events", sim.out_events,
                        "Event output path; .jsonl selects JSONL, '-' = CSV to stdout");
    sim_cmd->add_option("--out-truth", sim.out_truth,
                        "Ground-truth JSON path (omit to skip)");

    cli::DecayOptions decay;
    auto* decay_cmd = app.add_subcommand(
        "decay", "Emit a plot-ready decay curve as CSV");
    decay_cmd->add_option("--x0", decay.x0, "Initial interest level")->required();
    decay_cmd->add_option("--m", decay.m, "Tedium coefficient per second")->required();
    decay_cmd->add_option("--t-max", decay.t_max,
                          "Curve horizon (suffix s/h/d/w; bare seconds)")
        ->required();
    decay_cmd->add_option("--samples", decay.samples, "Sample count (default 100)");
    decay_cmd->add_option("--output", decay.output, "CSV destination ('-' = stdout)");

    cli::MatchOptions match;
    auto* match_cmd = app.add_subcommand(
        "match", "Compare two users' decay-weighted tag profiles");
    match_cmd->add_option("--input", match.input, "Event log path")->required();
    match_cmd->add_option("--user-a", match.user_a, "First user id")->required();
    match_cmd->add_option("--user-b", match.user_b, "Second user id")->required();
    match_cmd->add_option("--m", match.m, "Tedium coefficient per second")->required();
    match_cmd->add_option("--at", match.at, "Profile instant (ISO-8601)")->required();

    cli::IntervalsOptions intervals;
    auto* intervals_cmd = app.add_subcommand(
        "intervals", "Extract retag intervals (time between differing tag sets)");
    intervals_cmd->add_option("--input", intervals.input, "Event log path")->required();
    intervals_cmd->add_option("--output", intervals.output, "CSV destination ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(cli::ExitCode::UsageError);
    }

    try {
        if (*fit_cmd) return cli::run_fit(fit);
        if (*sim_cmd) return cli::run_simulate(sim);
        if (*decay_cmd) return cli::run_decay(decay);
        if (*match_cmd) return cli::run_match(match);
        if (*intervals_cmd) return cli::run_intervals(intervals);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(cli::ExitCode::RuntimeError);
    }
    return static_cast<int>(cli::ExitCode::UsageError);
}
