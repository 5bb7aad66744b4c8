#include "tagdecay/time.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "tagdecay/errors.hpp"

namespace tagdecay {

namespace {

// Howard Hinnant's days-from-civil algorithm; valid far beyond any
// timestamp this library will see.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y = yr + (m <= 2);
}

bool parse_uint(std::string_view s, std::size_t pos, std::size_t len, unsigned& out) {
    if (pos + len > s.size()) return false;
    unsigned v = 0;
    for (std::size_t i = pos; i < pos + len; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        v = v * 10 + static_cast<unsigned>(s[i] - '0');
    }
    out = v;
    return true;
}

[[noreturn]] void bad_timestamp(std::string_view text) {
    throw ArgumentError("bad timestamp '" + std::string(text) + "'");
}

}  // namespace

TimeInstant TimeInstant::from_iso8601(std::string_view text) {
    // Fixed prefix: YYYY-MM-DDTHH:MM:SS
    unsigned year, month, day, hour, minute, second;
    if (text.size() < 20 || !parse_uint(text, 0, 4, year) || text[4] != '-' ||
        !parse_uint(text, 5, 2, month) || text[7] != '-' || !parse_uint(text, 8, 2, day) ||
        (text[10] != 'T' && text[10] != 't' && text[10] != ' ') ||
        !parse_uint(text, 11, 2, hour) || text[13] != ':' || !parse_uint(text, 14, 2, minute) ||
        text[16] != ':' || !parse_uint(text, 17, 2, second)) {
        bad_timestamp(text);
    }
    if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || minute > 59 ||
        second > 60) {
        bad_timestamp(text);
    }
    {
        // Reject dates that only exist by rollover (e.g. February 31).
        std::int64_t y2;
        unsigned m2, d2;
        civil_from_days(days_from_civil(year, month, day), y2, m2, d2);
        if (y2 != static_cast<std::int64_t>(year) || m2 != month || d2 != day) {
            bad_timestamp(text);
        }
    }

    std::size_t pos = 19;
    std::int64_t frac_us = 0;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::size_t digits = 0;
        std::int64_t scale = 100000;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (digits < 6) frac_us += static_cast<std::int64_t>(text[pos] - '0') * scale;
            scale /= 10;
            ++digits;
            ++pos;
        }
        if (digits == 0) bad_timestamp(text);
    }

    if (pos >= text.size()) bad_timestamp(text);  // timezone is mandatory
    std::int64_t offset_min = 0;
    const char zc = text[pos];
    if (zc == 'Z' || zc == 'z') {
        ++pos;
    } else if (zc == '+' || zc == '-') {
        ++pos;
        unsigned oh = 0, om = 0;
        if (!parse_uint(text, pos, 2, oh)) bad_timestamp(text);
        pos += 2;
        if (pos < text.size() && text[pos] == ':') ++pos;
        if (pos + 2 <= text.size() &&
            std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (!parse_uint(text, pos, 2, om)) bad_timestamp(text);
            pos += 2;
        }
        if (oh > 23 || om > 59) bad_timestamp(text);
        offset_min = static_cast<std::int64_t>(oh) * 60 + om;
        if (zc == '-') offset_min = -offset_min;
    } else {
        bad_timestamp(text);
    }
    if (pos != text.size()) bad_timestamp(text);

    const std::int64_t days = days_from_civil(year, month, day);
    const std::int64_t secs =
        days * 86400 + static_cast<std::int64_t>(hour) * 3600 +
        static_cast<std::int64_t>(minute) * 60 + second - offset_min * 60;
    return TimeInstant::from_micros(secs * 1000000 + frac_us);
}

std::string TimeInstant::to_iso8601() const {
    std::int64_t total_us = us_;
    std::int64_t secs = total_us / 1000000;
    std::int64_t frac = total_us % 1000000;
    if (frac < 0) {
        frac += 1000000;
        secs -= 1;
    }

    std::int64_t days = secs / 86400;
    std::int64_t sod = secs % 86400;
    if (sod < 0) {
        sod += 86400;
        days -= 1;
    }

    std::int64_t year;
    unsigned month, day;
    civil_from_days(days, year, month, day);
    const unsigned hour = static_cast<unsigned>(sod / 3600);
    const unsigned minute = static_cast<unsigned>((sod % 3600) / 60);
    const unsigned second = static_cast<unsigned>(sod % 60);

    char buf[40];
    int n = std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02u:%02u:%02u",
                          static_cast<long long>(year), month, day, hour, minute, second);
    std::string out(buf, static_cast<std::size_t>(n));
    if (frac != 0) {
        char fb[8];
        std::snprintf(fb, sizeof(fb), ".%06lld", static_cast<long long>(frac));
        std::string f(fb);
        while (f.back() == '0') f.pop_back();
        out += f;
    }
    out += 'Z';
    return out;
}

TimeInstant TimeInstant::operator+(Duration d) const {
    return TimeInstant::from_micros(us_ + std::llround(d.count_seconds() * 1e6));
}

TimeInstant TimeInstant::operator-(Duration d) const {
    return TimeInstant::from_micros(us_ - std::llround(d.count_seconds() * 1e6));
}

Duration parse_duration(std::string_view text) {
    if (text.empty()) throw ArgumentError("empty duration");
    double factor = 1.0;
    std::string_view num = text;
    switch (text.back()) {
        case 's': factor = 1.0; num.remove_suffix(1); break;
        case 'h': factor = 3600.0; num.remove_suffix(1); break;
        case 'd': factor = 86400.0; num.remove_suffix(1); break;
        case 'w': factor = 604800.0; num.remove_suffix(1); break;
        default: break;
    }
    if (num.empty()) throw ArgumentError("bad duration '" + std::string(text) + "'");
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc{} || ptr != num.data() + num.size() || !std::isfinite(value)) {
        throw ArgumentError("bad duration '" + std::string(text) + "'");
    }
    return Duration::seconds(value * factor);
}

}  // namespace tagdecay
