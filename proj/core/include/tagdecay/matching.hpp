#pragma once

#include <map>
#include <string>
#include <vector>

#include "tagdecay/events.hpp"
#include "tagdecay/time.hpp"

namespace tagdecay {

/// Decay-weighted per-tag intensity vector for one user at a reference
/// instant. Weights are finite and > 0; tags whose weight decayed to exactly
/// zero are omitted. The map is ordered so that dot products are summed in
/// a canonical order regardless of argument order.
struct TagProfile {
    std::string user_id;
    TimeInstant reference_time;
    std::map<std::string, double> weights;
};

/// Profile serialization: {user_id, reference_time, weights: {tag: weight}}.
std::string to_json(const TagProfile& profile);

/// weight(tag) = sum over the user's events carrying that tag of
/// exp(-m * (at - event_time)). Events by other users are ignored; an event
/// of this user newer than `at` throws TemporalOrderError (filter the event
/// set first when a cutoff view is wanted). Throws ConstraintError if
/// m <= 0.
TagProfile build_profile(const std::vector<TaggingEvent>& events, const std::string& user_id,
                         double tedium_coefficient, TimeInstant at);

/// Cosine similarity of the weight vectors over the union of tags, in
/// [0, 1]. Defined as 0 when either profile is empty: absence of evidence is
/// not identity of interest. Symmetric exactly, and scale-invariant, so pure
/// decay between two instants leaves it at 1.
double similarity(const TagProfile& a, const TagProfile& b);

/// How much the user's interest composition turned over between t1 and t2:
/// 1 - similarity of the profiles at the two instants, each built from the
/// events at or before its own instant. Requires t1 < t2.
double drift(const std::vector<TaggingEvent>& events, const std::string& user_id,
             double tedium_coefficient, TimeInstant t1, TimeInstant t2);

}  // namespace tagdecay
