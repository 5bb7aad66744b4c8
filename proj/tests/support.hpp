// Shared helpers for the test suites: tolerance checks, an extended-precision
// exponential oracle independent of the library, and fixture builders.
#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "tagdecay/rng.hpp"
#include "tagdecay/time.hpp"
#include "tagdecay/usage.hpp"

namespace testsupport {

inline bool close_abs(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

inline bool close_rel(double a, double b, double tol) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return scale == 0.0 || std::fabs(a - b) <= tol * scale;
}

/// e^x summed as a long-double Taylor series with halving reduction; good to
/// ~1e-18 relative, well beyond double. This is the reference all frozen
/// exponential expectations were produced with.
inline long double oracle_exp(long double x) {
    int halvings = 0;
    while (std::fabs(static_cast<double>(x)) > 0.5) {
        x /= 2.0L;
        ++halvings;
    }
    long double sum = 1.0L, term = 1.0L;
    for (int k = 1; k < 40; ++k) {
        term *= x / k;
        sum += term;
        if (std::fabs(static_cast<double>(term)) < 1e-25) break;
    }
    for (int i = 0; i < halvings; ++i) sum *= sum;
    return sum;
}

constexpr long double kLn2 = 0.69314718055994530941723212145818L;

/// Builds a series with bins of the given width whose first midpoint sits at
/// `first_midpoint`; intensities are taken as given.
inline tagdecay::UsageSeries make_series(tagdecay::TimeInstant first_midpoint,
                                         tagdecay::Duration bin_width,
                                         const std::vector<double>& intensities) {
    tagdecay::UsageSeries series;
    series.user_id = "synthetic";
    series.scope = tagdecay::Scope::tag("synthetic");
    series.bin_width = bin_width;
    const auto width_us = static_cast<std::int64_t>(
        std::llround(bin_width.count_seconds() * 1e6));
    for (std::size_t i = 0; i < intensities.size(); ++i) {
        series.points.push_back(
            {tagdecay::TimeInstant::from_micros(first_midpoint.micros() +
                                                static_cast<std::int64_t>(i) * width_us),
             intensities[i]});
    }
    return series;
}

/// Noiseless series sampled from the decay curve: intensity(i) =
/// x0 * exp(-m * i * bin_width) with x0 quoted at the first midpoint.
inline tagdecay::UsageSeries make_decay_series(double x0, double m_per_second,
                                               tagdecay::Duration bin_width,
                                               std::size_t bins,
                                               tagdecay::TimeInstant first_midpoint =
                                                   tagdecay::TimeInstant::epoch()) {
    std::vector<double> intensities;
    intensities.reserve(bins);
    for (std::size_t i = 0; i < bins; ++i) {
        const double t = static_cast<double>(i) * bin_width.count_seconds();
        intensities.push_back(x0 * std::exp(-m_per_second * t));
    }
    return make_series(first_midpoint, bin_width, intensities);
}

/// Poisson counts via inversion by sequential search (mu modest); test-only.
inline double poisson(tagdecay::Rng& rng, double mu) {
    const double u = rng.uniform01();
    double p = std::exp(-mu), cdf = p;
    double k = 0.0;
    while (u > cdf && k < 1e6) {
        k += 1.0;
        p *= mu / k;
        cdf += p;
    }
    return k;
}

}  // namespace testsupport
