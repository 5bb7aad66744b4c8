#include "tagdecay/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "tagdecay/errors.hpp"

namespace tagdecay {

namespace {

constexpr const char* kNoForgettingWarning = "no forgetting detected";

struct Sample {
    double t;  // seconds relative to the reference instant
    double y;
};

std::vector<Sample> to_samples(const UsageSeries& series, TimeInstant reference) {
    std::vector<Sample> samples;
    samples.reserve(series.points.size());
    for (const auto& p : series.points) {
        samples.push_back({(p.midpoint - reference).count_seconds(), p.intensity});
    }
    return samples;
}

double predict(double x0, double m, double t) { return x0 * std::exp(-m * t); }

double sum_squared_residuals(const std::vector<Sample>& samples, double x0, double m) {
    double ssr = 0.0;
    for (const auto& s : samples) {
        const double r = s.y - predict(x0, m, s.t);
        ssr += r * r;
    }
    return ssr;
}

Goodness diagnostics(const std::vector<Sample>& samples, double x0, double m) {
    double ss_res = 0.0, mean = 0.0;
    for (const auto& s : samples) mean += s.y;
    mean /= static_cast<double>(samples.size());
    double ss_tot = 0.0;
    for (const auto& s : samples) {
        const double r = s.y - predict(x0, m, s.t);
        ss_res += r * r;
        ss_tot += (s.y - mean) * (s.y - mean);
    }
    Goodness g;
    g.rmse = std::sqrt(ss_res / static_cast<double>(samples.size()));
    if (ss_tot > 0.0) {
        g.r_squared = 1.0 - ss_res / ss_tot;
    } else {
        g.r_squared = ss_res == 0.0 ? 1.0 : -std::numeric_limits<double>::infinity();
    }
    return g;
}

TimeInstant pick_reference(const UsageSeries& series, std::optional<TimeInstant> reference) {
    if (reference) return *reference;
    if (series.points.empty()) return TimeInstant::epoch();
    return series.points.front().midpoint;
}

}  // namespace

std::string to_string(FitMethod method) {
    return method == FitMethod::Loglinear ? "loglinear" : "nonlinear";
}

DecayParams FitResult::params() const {
    if (!accepted) {
        throw ConstraintError("fit was not accepted; estimates do not satisfy the model");
    }
    return DecayParams(x0, m);
}

std::string to_json(const FitResult& fit) {
    nlohmann::ordered_json j;
    j["method"] = to_string(fit.method);
    j["x0"] = fit.x0;
    j["m"] = fit.m;
    j["rmse"] = fit.rmse;
    j["r_squared"] = fit.r_squared;
    j["n_points"] = fit.n_points;
    j["warnings"] = fit.warnings;
    j["accepted"] = fit.accepted;
    return j.dump(2);
}

FitResult fit_loglinear(const UsageSeries& series, std::optional<TimeInstant> reference) {
    const TimeInstant ref = pick_reference(series, reference);
    const auto all = to_samples(series, ref);

    std::vector<Sample> pts;
    for (const auto& s : all) {
        if (s.y > 0.0) pts.push_back(s);
    }
    if (pts.size() < 3) {
        throw InsufficientDataError("log-linear fit needs at least 3 positive bins, got " +
                                    std::to_string(pts.size()));
    }

    double t_mean = 0.0, z_mean = 0.0;
    double z_min = std::log(pts.front().y), z_max = z_min;
    for (const auto& s : pts) {
        const double z = std::log(s.y);
        t_mean += s.t;
        z_mean += z;
        z_min = std::min(z_min, z);
        z_max = std::max(z_max, z);
    }
    const double n = static_cast<double>(pts.size());
    t_mean /= n;
    z_mean /= n;

    double stt = 0.0, stz = 0.0;
    for (const auto& s : pts) {
        const double dt = s.t - t_mean;
        stt += dt * dt;
        stz += dt * (std::log(s.y) - z_mean);
    }
    if (stt == 0.0) {
        throw DegenerateDataError("all positive bins share one timestamp");
    }

    // A constant series must come out at slope exactly zero; summation noise
    // in stz would otherwise give it an arbitrary tiny sign.
    const double slope = z_max == z_min ? 0.0 : stz / stt;
    FitResult fit;
    fit.method = FitMethod::Loglinear;
    fit.reference = ref;
    fit.m = slope == 0.0 ? 0.0 : -slope;  // avoid -0.0 in serialized output
    fit.x0 = std::exp(z_mean - slope * t_mean);  // model value at t = 0 (the reference)
    fit.n_points = pts.size();
    if (slope >= 0.0) {
        fit.warnings.emplace_back(kNoForgettingWarning);
    }
    if (!std::isfinite(fit.x0)) {
        fit.warnings.emplace_back("estimated initial interest is not a valid interest level");
    }
    fit.accepted = slope < 0.0 && std::isfinite(fit.x0);

    const auto g = diagnostics(all, fit.x0, fit.m);
    fit.rmse = g.rmse;
    fit.r_squared = g.r_squared;
    return fit;
}

FitResult fit_nonlinear(const UsageSeries& series, std::optional<DecayParams> init,
                        std::optional<TimeInstant> reference) {
    const TimeInstant ref = pick_reference(series, reference);
    const auto samples = to_samples(series, ref);
    if (samples.size() < 3) {
        throw InsufficientDataError("nonlinear fit needs at least 3 bins, got " +
                                    std::to_string(samples.size()));
    }

    FitResult fit;
    fit.method = FitMethod::Nonlinear;
    fit.reference = ref;
    fit.n_points = samples.size();

    double y_max = 0.0, t_min = samples.front().t, t_max = samples.front().t;
    for (const auto& s : samples) {
        y_max = std::max(y_max, s.y);
        t_min = std::min(t_min, s.t);
        t_max = std::max(t_max, s.t);
    }
    if (y_max == 0.0) {
        fit.warnings.emplace_back("insufficient signal: all intensities are zero");
        fit.accepted = false;
        fit.rmse = 0.0;
        fit.r_squared = 1.0;
        return fit;
    }
    if (t_max == t_min) {
        throw DegenerateDataError("all bins share one timestamp");
    }

    double x0 = 0.0, m = 0.0;
    if (init) {
        x0 = init->x0();
        m = init->m();
    } else {
        bool have_init = false;
        try {
            const FitResult ll = fit_loglinear(series, ref);
            if (ll.accepted) {
                x0 = ll.x0;
                m = ll.m;
                have_init = true;
            }
        } catch (const Error&) {
        }
        if (!have_init) {
            x0 = y_max;
            m = std::log(2.0) / ((t_max - t_min) / 2.0);
        }
    }

    double ssr = sum_squared_residuals(samples, x0, m);
    if (!std::isfinite(ssr)) {
        throw NumericalError("non-finite residuals at starting point (x0=" +
                             std::to_string(x0) + ", m=" + std::to_string(m) + ")");
    }

    double damping = 1e-3;
    bool hit_cap = true;
    for (int iter = 0; iter < 200; ++iter) {
        // Normal equations for the 2-parameter model.
        double a11 = 0.0, a12 = 0.0, a22 = 0.0, g1 = 0.0, g2 = 0.0;
        for (const auto& s : samples) {
            const double e = std::exp(-m * s.t);
            const double f = x0 * e;
            const double r = s.y - f;
            const double j1 = e;            // df/dx0
            const double j2 = -x0 * s.t * e;  // df/dm
            a11 += j1 * j1;
            a12 += j1 * j2;
            a22 += j2 * j2;
            g1 += j1 * r;
            g2 += j2 * r;
        }

        bool stepped = false;
        while (damping <= 1e12) {
            const double d11 = a11 * (1.0 + damping);
            const double d22 = a22 * (1.0 + damping);
            const double det = d11 * d22 - a12 * a12;
            if (!(det > 0.0) || !std::isfinite(det)) {
                damping *= 10.0;
                continue;
            }
            const double dx0 = (d22 * g1 - a12 * g2) / det;
            const double dm = (d11 * g2 - a12 * g1) / det;

            const double rel_change =
                std::max(std::abs(dx0) / std::max(std::abs(x0), 1e-300),
                         std::abs(dm) / std::max(std::abs(m), 1e-300));
            if (rel_change < 1e-10) {
                hit_cap = false;
                stepped = false;
                break;
            }

            const double ssr_new = sum_squared_residuals(samples, x0 + dx0, m + dm);
            if (std::isfinite(ssr_new) && ssr_new < ssr) {
                x0 += dx0;
                m += dm;
                ssr = ssr_new;
                damping = std::max(damping / 10.0, 1e-15);
                stepped = true;
                break;
            }
            damping *= 10.0;
        }
        if (!stepped) {
            if (damping > 1e12) hit_cap = false;  // stalled: no descent direction left
            break;
        }
    }
    if (hit_cap) {
        fit.warnings.emplace_back("iteration cap (200) reached before convergence");
    }

    fit.x0 = x0;
    fit.m = m;
    if (m <= 0.0) {
        fit.warnings.emplace_back(kNoForgettingWarning);
    }
    if (x0 < 0.0 || !std::isfinite(x0)) {
        fit.warnings.emplace_back("estimated initial interest is not a valid interest level");
    }
    fit.accepted = m > 0.0 && x0 >= 0.0 && std::isfinite(x0) && std::isfinite(m);

    const auto g = diagnostics(samples, x0, m);
    fit.rmse = g.rmse;
    fit.r_squared = g.r_squared;
    return fit;
}

Goodness goodness_of_fit(const UsageSeries& series, const DecayParams& params,
                         std::optional<TimeInstant> reference) {
    if (series.points.empty()) {
        throw ArgumentError("series is empty");
    }
    const auto samples = to_samples(series, pick_reference(series, reference));
    return diagnostics(samples, params.x0(), params.m());
}

}  // namespace tagdecay
