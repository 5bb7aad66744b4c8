#pragma once

#include <string>
#include <vector>

#include "tagdecay/events.hpp"
#include "tagdecay/time.hpp"

namespace tagdecay {

/// What slice of a user's events a usage series counts: one tag, or one
/// ontology.
struct Scope {
    enum class Kind { Tag, Ontology };

    static Scope tag(std::string value) { return {Kind::Tag, std::move(value)}; }
    static Scope ontology(std::string value) { return {Kind::Ontology, std::move(value)}; }

    bool matches(const TaggingEvent& e) const {
        return kind == Kind::Tag ? e.tag == value : e.ontology_id == value;
    }

    std::string to_string() const {
        return (kind == Kind::Tag ? "tag:" : "ontology:") + value;
    }

    Kind kind = Kind::Tag;
    std::string value;
};

struct UsagePoint {
    TimeInstant midpoint;
    double intensity = 0.0;  // integral event count when produced by bin_usage
};

/// Time-binned usage intensities for one (user, scope) pair. Points are
/// strictly increasing in time and spaced exactly bin_width apart; empty
/// bins are present with intensity 0.
struct UsageSeries {
    std::string user_id;
    Scope scope;
    Duration bin_width;
    std::vector<UsagePoint> points;
};

/// Counts matching events per bin over [start, end). Bins cover
/// [start + i*w, start + (i+1)*w); the last bin may extend past `end` but
/// only events strictly before `end` are counted. An event exactly at `end`
/// is excluded. Requires end > start and bin_width > 0.
UsageSeries bin_usage(const std::vector<TaggingEvent>& events, const std::string& user_id,
                      const Scope& scope, Duration bin_width, TimeInstant start,
                      TimeInstant end);

/// Elapsed time between two successive, differing tag-set assignments by
/// the same user to the same object.
struct RetagInterval {
    std::string user_id;
    std::string object_id;
    TimeInstant start;  // instant of the earlier snapshot
    Duration gap;       // always > 0

    bool operator==(const RetagInterval&) const = default;
};

/// Extracts retag intervals. Per (user, object), events are time-ordered and
/// merged into snapshots by identical timestamp; an interval is emitted
/// between successive snapshots whose tag sets differ. The result is sorted
/// by user, object, then time, and is invariant under permutation of the
/// input.
std::vector<RetagInterval> retag_intervals(const std::vector<TaggingEvent>& events);

}  // namespace tagdecay
