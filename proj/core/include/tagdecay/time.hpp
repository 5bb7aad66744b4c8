#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace tagdecay {

/// Span of time. Canonical unit is seconds, stored as double so it can be
/// used directly in decay arithmetic. May be negative when it is the result
/// of subtracting instants; operations that need elapsed time validate
/// non-negativity themselves.
class Duration {
public:
    constexpr Duration() = default;

    static constexpr Duration seconds(double s) { return Duration(s); }
    static constexpr Duration hours(double h) { return Duration(h * 3600.0); }
    static constexpr Duration days(double d) { return Duration(d * 86400.0); }
    static constexpr Duration weeks(double w) { return Duration(w * 604800.0); }

    constexpr double count_seconds() const { return secs_; }
    constexpr double count_hours() const { return secs_ / 3600.0; }
    constexpr double count_days() const { return secs_ / 86400.0; }
    constexpr double count_weeks() const { return secs_ / 604800.0; }

    constexpr Duration operator+(Duration o) const { return Duration(secs_ + o.secs_); }
    constexpr Duration operator-(Duration o) const { return Duration(secs_ - o.secs_); }
    constexpr Duration operator*(double k) const { return Duration(secs_ * k); }
    constexpr Duration operator/(double k) const { return Duration(secs_ / k); }

    constexpr auto operator<=>(const Duration&) const = default;

private:
    explicit constexpr Duration(double s) : secs_(s) {}
    double secs_ = 0.0;
};

/// Point on the time axis, stored as whole microseconds since the Unix
/// epoch. Microsecond ticks keep instant arithmetic, ordering, and the
/// ISO-8601 round trip exact; elapsed times convert to Duration (double
/// seconds) for the decay math.
class TimeInstant {
public:
    constexpr TimeInstant() = default;

    static constexpr TimeInstant epoch() { return TimeInstant(); }
    static constexpr TimeInstant from_micros(std::int64_t us) { return TimeInstant(us); }

    constexpr std::int64_t micros() const { return us_; }

    /// Parses "YYYY-MM-DDTHH:MM:SS[.frac](Z|+HH:MM|-HH:MM|+HHMM|-HHMM|+HH|-HH)".
    /// Fractional digits beyond microseconds are truncated.
    /// Throws ArgumentError on malformed input.
    static TimeInstant from_iso8601(std::string_view text);

    /// Canonical UTC form with the fractional part trimmed of trailing
    /// zeros, e.g. "2024-01-01T00:00:00Z" or "1970-01-02T03:04:05.0625Z".
    std::string to_iso8601() const;

    TimeInstant operator+(Duration d) const;
    TimeInstant operator-(Duration d) const;
    Duration operator-(TimeInstant o) const {
        return Duration::seconds(static_cast<double>(us_ - o.us_) / 1e6);
    }

    constexpr auto operator<=>(const TimeInstant&) const = default;

private:
    explicit constexpr TimeInstant(std::int64_t us) : us_(us) {}
    std::int64_t us_ = 0;
};

/// Parses a duration literal: a real number with an optional unit suffix
/// s (seconds), h (hours), d (days) or w (weeks). A bare number is seconds.
/// Throws ArgumentError on malformed input.
Duration parse_duration(std::string_view text);

}  // namespace tagdecay
