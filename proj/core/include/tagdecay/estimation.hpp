#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tagdecay/decay.hpp"
#include "tagdecay/time.hpp"
#include "tagdecay/usage.hpp"

namespace tagdecay {

enum class FitMethod { Loglinear, Nonlinear };

std::string to_string(FitMethod method);

/**
 * @brief Estimated decay parameters plus residual diagnostics.
 *
 * x0 is the model intensity at `reference`, m the estimated tedium
 * coefficient per second. A fit is accepted iff m > 0 (the model constraint)
 * and at least 3 points were used; estimates that fail that carry the raw
 * values, a warning, and accepted == false.
 *
 * r_squared is 1 - SS_res/SS_tot and may be -inf when the data has zero
 * variance but nonzero residuals.
 */
struct FitResult {
    FitMethod method = FitMethod::Loglinear;
    double x0 = 0.0;
    double m = 0.0;
    double rmse = 0.0;
    double r_squared = 0.0;
    std::size_t n_points = 0;
    std::vector<std::string> warnings;
    bool accepted = false;
    TimeInstant reference;

    /// Validated parameters of an accepted fit; throws ConstraintError if
    /// the fit was not accepted.
    DecayParams params() const;
};

/// Serializes the CLI contract: a JSON object with fields method, x0, m,
/// rmse, r_squared, n_points, warnings, accepted.
std::string to_json(const FitResult& fit);

/// Ordinary least squares on (t, ln intensity) over the strictly positive
/// bins; ln x = ln x0 - m t. Zero bins are excluded (ln 0 is undefined; use
/// fit_nonlinear when they matter). A non-negative slope yields a
/// "no forgetting detected" warning and accepted == false.
///
/// `reference` is the instant x0 is quoted at; it defaults to the first bin
/// midpoint. Throws InsufficientDataError with fewer than 3 positive bins
/// and DegenerateDataError when all of them share one timestamp.
FitResult fit_loglinear(const UsageSeries& series,
                        std::optional<TimeInstant> reference = std::nullopt);

/// Damped least squares (Gauss-Newton with adaptive damping) directly on
/// x0 * exp(-m t); zero bins participate. Initialized from `init` when
/// given, else from fit_loglinear on the positive bins, else from
/// (max intensity, ln 2 / half the span). Damping is multiplied by 10 when
/// a step increases the residual and divided by 10 when it decreases,
/// starting at 1e-3; convergence is relative parameter change < 1e-10,
/// capped at 200 iterations (cap adds a warning).
///
/// Never returns a worse sum of squared residuals than its starting point.
/// Throws NumericalError if residuals are non-finite at the starting point.
FitResult fit_nonlinear(const UsageSeries& series,
                        std::optional<DecayParams> init = std::nullopt,
                        std::optional<TimeInstant> reference = std::nullopt);

/// RMSE and R-squared of the series intensities against the model curve at
/// the bin midpoints. Throws ArgumentError on an empty series.
struct Goodness {
    double rmse = 0.0;
    double r_squared = 0.0;
};

Goodness goodness_of_fit(const UsageSeries& series, const DecayParams& params,
                         std::optional<TimeInstant> reference = std::nullopt);

}  // namespace tagdecay
