#pragma once

#include <cstdint>
#include <vector>

#include "tagdecay/time.hpp"

namespace tagdecay {

/**
 * @brief Parameters of the exponential interest-decay model.
 *
 * A user's interest in a tagged Web object evolves as
 *
 *   x(t) = x0 * exp(-m * t)
 *
 * where x0 is the interest level at t = 0 and m is the tedium coefficient:
 * the rate at which the object becomes boring. m is strictly positive by
 * construction; larger m means faster forgetting and a shorter half-life.
 *
 * Interest is dimensionless. It is whatever proxy the estimation layer
 * produces (binned event counts are the usual one), so no [0, 1]
 * normalization is imposed.
 */
class DecayParams {
public:
    /// Throws ConstraintError unless m > 0, x0 >= 0 and both are finite.
    DecayParams(double initial_interest, double tedium_coefficient);

    /// Interest level at t = 0.
    double x0() const { return x0_; }

    /// Tedium coefficient, per second.
    double m() const { return m_; }

private:
    double x0_;
    double m_;
};

/// Closed-form interest level after elapsed time t: x0 * exp(-m * t).
/// The result lies in [0, x0]. Throws ConstraintError if t < 0.
double evaluate_interest(const DecayParams& params, Duration t);

/// The decay rate dx/dt = -m * x at interest level x. Zero iff x is zero,
/// and of opposite sign to x. Throws ConstraintError unless m > 0 and x is
/// finite.
double forgetfulness_rate(double interest, double tedium_coefficient);

/// Forward explicit (Euler) integration of dx/dt = -m * x from x0 over
/// horizon t in `steps` equal steps. Converges to evaluate_interest with
/// first-order error as steps grows.
///
/// The per-step factor (1 - m*t/steps) must be non-negative or the
/// iteration oscillates; steps violating that throw StepSizeError carrying
/// the minimum admissible step count.
double integrate_euler(const DecayParams& params, Duration t, std::uint64_t steps);

/// Time for interest to halve: ln(2) / m. Throws ConstraintError if m <= 0.
Duration half_life(double tedium_coefficient);

struct CurvePoint {
    double t;  // seconds from the start of the curve
    double x;  // interest level at t
};

/// Evenly spaced samples of the decay curve on [0, t_max], endpoints
/// included. Strictly decreasing in x when x0 > 0. Requires samples >= 2
/// and t_max > 0; throws ArgumentError otherwise.
std::vector<CurvePoint> decay_curve(const DecayParams& params, Duration t_max,
                                    std::size_t samples);

}  // namespace tagdecay
