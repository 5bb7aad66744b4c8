#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "tagdecay/decay.hpp"
#include "tagdecay/errors.hpp"
#include "tagdecay/estimation.hpp"
#include "tagdecay/events.hpp"
#include "tagdecay/matching.hpp"
#include "tagdecay/simulation.hpp"
#include "tagdecay/time.hpp"
#include "tagdecay/usage.hpp"

namespace tagdecay::cli {

namespace {

constexpr int kOk = static_cast<int>(ExitCode::Ok);
constexpr int kRuntimeError = static_cast<int>(ExitCode::RuntimeError);
constexpr int kFitNotAccepted = static_cast<int>(ExitCode::FitNotAccepted);
constexpr int kUsageError = static_cast<int>(ExitCode::UsageError);

int fail(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kRuntimeError;
}

int usage_fail(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kUsageError;
}

// Shortest text that parses back to the same double; integral values come
// out as plain decimals.
std::string fmt_double(double v) {
    if (v == std::floor(v) && std::fabs(v) < 1e15) {
        return std::to_string(static_cast<long long>(v));
    }
    for (int prec = 1; prec < 17; ++prec) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) {
            return buf;
        }
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Sink that is either stdout ("-") or an owned file stream.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) {
                throw IoError("cannot write '" + path + "'");
            }
        }
    }

    std::ostream& stream() { return file_ ? *file_ : std::cout; }

    void finish() {
        if (file_) {
            file_->flush();
            if (!*file_) {
                throw IoError("write failure");
            }
        }
    }

private:
    std::unique_ptr<std::ofstream> file_;
};

EventFormat resolve_format(const std::string& format, const std::string& path) {
    if (format == "csv") return EventFormat::Csv;
    if (format == "jsonl") return EventFormat::Jsonl;
    if (path.size() >= 6 && path.compare(path.size() - 6, 6, ".jsonl") == 0) {
        return EventFormat::Jsonl;
    }
    return EventFormat::Csv;
}

std::vector<TaggingEvent> load_events(const std::string& path, const std::string& format) {
    const auto parsed = parse_events_file(path, resolve_format(format, path));
    for (const auto& d : parsed.diagnostics) {
        std::cerr << d.to_string() << "\n";
    }
    return parsed.events;
}

Scope parse_scope(const std::string& text) {
    if (text.rfind("ontology:", 0) == 0) return Scope::ontology(text.substr(9));
    if (text.rfind("tag:", 0) == 0) return Scope::tag(text.substr(4));
    return Scope::tag(text);
}

bool parse_range(const std::string& text, double& lo, double& hi) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) return false;
    try {
        std::size_t used = 0;
        lo = std::stod(text.substr(0, colon), &used);
        if (used != colon) return false;
        const std::string rest = text.substr(colon + 1);
        hi = std::stod(rest, &used);
        return used == rest.size();
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

int run_fit(const FitOptions& opt) {
    Duration bin_width;
    try {
        bin_width = parse_duration(opt.bin);
    } catch (const ArgumentError& e) {
        return usage_fail(std::string("--bin: ") + e.what());
    }
    if (bin_width.count_seconds() <= 0.0) {
        return usage_fail("--bin must be positive");
    }
    if (opt.method != "loglinear" && opt.method != "nonlinear") {
        return usage_fail("--method must be loglinear or nonlinear");
    }

    try {
        const auto events = load_events(opt.input, opt.format);
        const Scope scope = parse_scope(opt.scope);

        TimeInstant first, last;
        bool any = false;
        for (const auto& e : events) {
            if (e.user_id != opt.user || !scope.matches(e)) continue;
            if (!any || e.timestamp < first) first = e.timestamp;
            if (!any || e.timestamp > last) last = e.timestamp;
            any = true;
        }
        if (!any) {
            return fail("no events for user '" + opt.user + "' in scope " + scope.to_string());
        }

        const auto series =
            bin_usage(events, opt.user, scope, bin_width, first,
                      TimeInstant::from_micros(last.micros() + 1));
        const FitResult fit = opt.method == "loglinear" ? fit_loglinear(series)
                                                        : fit_nonlinear(series);

        OutputTarget out(opt.output);
        out.stream() << to_json(fit) << "\n";
        out.finish();
        return fit.accepted ? kOk : kFitNotAccepted;
    } catch (const Error& e) {
        return fail(e.what());
    }
}

int run_simulate(const SimulateOptions& opt) {
    CohortSpec spec;
    spec.n_users = opt.users;
    spec.seed = opt.seed;
    spec.tags_per_user = opt.tags_per_user;

    if (opt.users == 0) return usage_fail("--users must be at least 1");
    if (!std::isfinite(opt.days) || opt.days <= 0.0) {
        return usage_fail("--days must be positive");
    }
    if (!std::isfinite(opt.lambda0_per_day) || opt.lambda0_per_day <= 0.0) {
        return usage_fail("--lambda0 must be positive");
    }
    if (opt.tags_per_user == 0) return usage_fail("--tags-per-user must be at least 1");
    spec.horizon = Duration::days(opt.days);
    spec.lambda0 = opt.lambda0_per_day / 86400.0;

    double lo = 0.0, hi = 0.0;
    if (!parse_range(opt.m_range, lo, hi) || !(lo > 0.0) || !(lo <= hi) ||
        !std::isfinite(hi)) {
        return usage_fail("--m-range must be a:b with 0 < a <= b (per day)");
    }
    spec.m_range = {lo / 86400.0, hi / 86400.0};
    if (!parse_range(opt.x0_range, lo, hi) || !(lo >= 0.0) || !(lo <= hi) ||
        !std::isfinite(hi)) {
        return usage_fail("--x0-range must be a:b with 0 <= a <= b");
    }
    spec.x0_range = {lo, hi};

    try {
        const CohortResult cohort = simulate_cohort(spec);

        OutputTarget events_out(opt.out_events);
        if (resolve_format("auto", opt.out_events) == EventFormat::Jsonl) {
            write_jsonl(cohort.events, events_out.stream());
        } else {
            write_csv(cohort.events, events_out.stream());
        }
        events_out.finish();

        if (!opt.out_truth.empty()) {
            OutputTarget truth_out(opt.out_truth);
            truth_out.stream() << to_json(cohort.truth) << "\n";
            truth_out.finish();
        }
        return kOk;
    } catch (const Error& e) {
        return fail(e.what());
    }
}

int run_decay(const DecayOptions& opt) {
    Duration t_max;
    try {
        t_max = parse_duration(opt.t_max);
    } catch (const ArgumentError& e) {
        return usage_fail(std::string("--t-max: ") + e.what());
    }

    try {
        const DecayParams params(opt.x0, opt.m);
        const auto curve = decay_curve(params, t_max, opt.samples);

        OutputTarget out(opt.output);
        out.stream() << "t,x\n";
        for (const auto& p : curve) {
            out.stream() << fmt_double(p.t) << ',' << fmt_double(p.x) << '\n';
        }
        out.finish();
        return kOk;
    } catch (const Error& e) {
        return fail(e.what());
    }
}

int run_match(const MatchOptions& opt) {
    TimeInstant at;
    try {
        at = TimeInstant::from_iso8601(opt.at);
    } catch (const ArgumentError& e) {
        return usage_fail(std::string("--at: ") + e.what());
    }

    try {
        auto events = load_events(opt.input, "auto");
        // Profiles describe the world as of `at`; later events are out of view.
        std::erase_if(events, [&](const TaggingEvent& e) { return e.timestamp > at; });

        const TagProfile a = build_profile(events, opt.user_a, opt.m, at);
        const TagProfile b = build_profile(events, opt.user_b, opt.m, at);

        nlohmann::ordered_json j;
        j["similarity"] = similarity(a, b);
        j["profile_a"] = nlohmann::ordered_json::parse(to_json(a));
        j["profile_b"] = nlohmann::ordered_json::parse(to_json(b));
        std::cout << j.dump(2) << "\n";
        return kOk;
    } catch (const Error& e) {
        return fail(e.what());
    }
}

int run_intervals(const IntervalsOptions& opt) {
    try {
        const auto events = load_events(opt.input, "auto");
        auto intervals = retag_intervals(events);
        std::sort(intervals.begin(), intervals.end(),
                  [](const RetagInterval& a, const RetagInterval& b) {
                      return std::tie(a.user_id, a.start, a.object_id) <
                             std::tie(b.user_id, b.start, b.object_id);
                  });

        OutputTarget out(opt.output);
        out.stream() << "user_id,object_id,gap_seconds\n";
        for (const auto& iv : intervals) {
            out.stream() << iv.user_id << ',' << iv.object_id << ','
                         << fmt_double(iv.gap.count_seconds()) << '\n';
        }
        out.finish();
        return kOk;
    } catch (const Error& e) {
        return fail(e.what());
    }
}

}  // namespace tagdecay::cli
