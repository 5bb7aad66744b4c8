#include "tagdecay/usage.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "tagdecay/errors.hpp"

namespace tagdecay {

UsageSeries bin_usage(const std::vector<TaggingEvent>& events, const std::string& user_id,
                      const Scope& scope, Duration bin_width, TimeInstant start,
                      TimeInstant end) {
    if (end <= start) {
        throw ArgumentError("span end must be after start");
    }
    const std::int64_t width_us = std::llround(bin_width.count_seconds() * 1e6);
    if (width_us <= 0) {
        throw ArgumentError("bin width must be positive, got " +
                            std::to_string(bin_width.count_seconds()) + " s");
    }

    const std::int64_t span_us = end.micros() - start.micros();
    const std::int64_t n_bins = (span_us + width_us - 1) / width_us;

    UsageSeries series{user_id, scope, Duration::seconds(static_cast<double>(width_us) / 1e6), {}};
    series.points.resize(static_cast<std::size_t>(n_bins));
    for (std::int64_t i = 0; i < n_bins; ++i) {
        series.points[static_cast<std::size_t>(i)].midpoint =
            TimeInstant::from_micros(start.micros() + i * width_us + width_us / 2);
    }

    for (const auto& e : events) {
        if (e.user_id != user_id || !scope.matches(e)) continue;
        if (e.timestamp < start || e.timestamp >= end) continue;
        const std::int64_t idx = (e.timestamp.micros() - start.micros()) / width_us;
        series.points[static_cast<std::size_t>(idx)].intensity += 1.0;
    }
    return series;
}

std::vector<RetagInterval> retag_intervals(const std::vector<TaggingEvent>& events) {
    // (user, object) -> timestamp -> tag set
    std::map<std::pair<std::string, std::string>,
             std::map<TimeInstant, std::set<std::string>>>
        snapshots;
    for (const auto& e : events) {
        snapshots[{e.user_id, e.object_id}][e.timestamp].insert(e.tag);
    }

    std::vector<RetagInterval> intervals;
    for (const auto& [owner, timeline] : snapshots) {
        const std::set<std::string>* prev_tags = nullptr;
        TimeInstant prev_time;
        for (const auto& [when, tags] : timeline) {
            if (prev_tags != nullptr && tags != *prev_tags) {
                intervals.push_back({owner.first, owner.second, prev_time, when - prev_time});
            }
            prev_tags = &tags;
            prev_time = when;
        }
    }
    return intervals;
}

}  // namespace tagdecay
