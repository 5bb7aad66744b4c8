#include "tagdecay/decay.hpp"

#include <cmath>
#include <string>

#include "tagdecay/errors.hpp"

namespace tagdecay {

DecayParams::DecayParams(double initial_interest, double tedium_coefficient)
    : x0_(initial_interest), m_(tedium_coefficient) {
    if (!std::isfinite(x0_) || !std::isfinite(m_)) {
        throw ConstraintError("decay parameters must be finite");
    }
    if (m_ <= 0.0) {
        throw ConstraintError("tedium coefficient must be positive, got " + std::to_string(m_));
    }
    if (x0_ < 0.0) {
        throw ConstraintError("initial interest must be non-negative, got " + std::to_string(x0_));
    }
}

double evaluate_interest(const DecayParams& params, Duration t) {
    const double secs = t.count_seconds();
    if (secs < 0.0) {
        throw ConstraintError("elapsed time must be non-negative, got " + std::to_string(secs));
    }
    return params.x0() * std::exp(-params.m() * secs);
}

double forgetfulness_rate(double interest, double tedium_coefficient) {
    if (!std::isfinite(tedium_coefficient) || tedium_coefficient <= 0.0) {
        throw ConstraintError("tedium coefficient must be positive, got " +
                              std::to_string(tedium_coefficient));
    }
    if (!std::isfinite(interest)) {
        throw ConstraintError("interest level must be finite");
    }
    return -tedium_coefficient * interest;
}

double integrate_euler(const DecayParams& params, Duration t, std::uint64_t steps) {
    const double secs = t.count_seconds();
    if (secs < 0.0) {
        throw ConstraintError("elapsed time must be non-negative, got " + std::to_string(secs));
    }
    if (steps == 0) {
        throw ArgumentError("step count must be at least 1");
    }
    if (secs == 0.0) {
        return params.x0();
    }

    const double h = secs / static_cast<double>(steps);
    if (params.m() * h > 1.0) {
        // Smallest step count keeping the per-step factor non-negative.
        std::uint64_t min_steps =
            static_cast<std::uint64_t>(std::ceil(params.m() * secs));
        while (params.m() * (secs / static_cast<double>(min_steps)) > 1.0) ++min_steps;
        throw StepSizeError("step size " + std::to_string(h) +
                                " s is outside the stable region m*h <= 1; need at least " +
                                std::to_string(min_steps) + " steps",
                            min_steps);
    }

    const double factor = 1.0 - params.m() * h;
    double x = params.x0();
    for (std::uint64_t i = 0; i < steps; ++i) {
        x *= factor;
    }
    return x;
}

Duration half_life(double tedium_coefficient) {
    if (!std::isfinite(tedium_coefficient) || tedium_coefficient <= 0.0) {
        throw ConstraintError("tedium coefficient must be positive, got " +
                              std::to_string(tedium_coefficient));
    }
    return Duration::seconds(std::log(2.0) / tedium_coefficient);
}

std::vector<CurvePoint> decay_curve(const DecayParams& params, Duration t_max,
                                    std::size_t samples) {
    if (samples < 2) {
        throw ArgumentError("need at least 2 samples, got " + std::to_string(samples));
    }
    if (t_max.count_seconds() <= 0.0) {
        throw ArgumentError("t_max must be positive, got " +
                            std::to_string(t_max.count_seconds()) + " s");
    }

    std::vector<CurvePoint> curve;
    curve.reserve(samples);
    const double span = t_max.count_seconds();
    const double denom = static_cast<double>(samples - 1);
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = span * (static_cast<double>(i) / denom);
        curve.push_back({t, evaluate_interest(params, Duration::seconds(t))});
    }
    return curve;
}

}  // namespace tagdecay
