#pragma once

#include <cstdint>
#include <string>
#include <utility>

namespace tagdecay::cli {

// Exit code contract, stable for scripting.
enum class ExitCode : int {
    Ok = 0,
    RuntimeError = 1,
    FitNotAccepted = 2,
    UsageError = 64,
};

struct FitOptions {
    std::string input;
    std::string format = "auto";  // csv | jsonl | auto (by extension)
    std::string user;
    std::string scope;  // "tag:<t>", "ontology:<id>", or bare tag
    std::string bin;    // duration literal
    std::string method;  // loglinear | nonlinear
    std::string output = "-";
};

struct SimulateOptions {
    std::size_t users = 20;
    double days = 150.0;
    double lambda0_per_day = 10.0;
    std::string m_range = "0.02:0.1";  // per day
    std::string x0_range = "1:5";
    std::size_t tags_per_user = 5;
    std::uint64_t seed = 42;
    std::string out_events = "-";
    std::string out_truth;  // optional
};

struct DecayOptions {
    double x0 = 0.0;
    double m = 0.0;  // per second
    std::string t_max;  // duration literal
    std::size_t samples = 100;
    std::string output = "-";
};

struct MatchOptions {
    std::string input;
    std::string user_a;
    std::string user_b;
    double m = 0.0;  // per second
    std::string at;  // ISO-8601 instant
};

struct IntervalsOptions {
    std::string input;
    std::string output = "-";
};

int run_fit(const FitOptions& opt);
int run_simulate(const SimulateOptions& opt);
int run_decay(const DecayOptions& opt);
int run_match(const MatchOptions& opt);
int run_intervals(const IntervalsOptions& opt);

}  // namespace tagdecay::cli
