#include "tagdecay/matching.hpp"

#include <cmath>

#include <json.hpp>

#include "tagdecay/errors.hpp"

namespace tagdecay {

std::string to_json(const TagProfile& profile) {
    nlohmann::ordered_json j;
    j["user_id"] = profile.user_id;
    j["reference_time"] = profile.reference_time.to_iso8601();
    j["weights"] = nlohmann::ordered_json::object();
    for (const auto& [tag, weight] : profile.weights) {
        j["weights"][tag] = weight;
    }
    return j.dump(2);
}

TagProfile build_profile(const std::vector<TaggingEvent>& events, const std::string& user_id,
                         double tedium_coefficient, TimeInstant at) {
    if (!std::isfinite(tedium_coefficient) || tedium_coefficient <= 0.0) {
        throw ConstraintError("tedium coefficient must be positive, got " +
                              std::to_string(tedium_coefficient));
    }

    TagProfile profile;
    profile.user_id = user_id;
    profile.reference_time = at;
    for (const auto& e : events) {
        if (e.user_id != user_id) continue;
        if (e.timestamp > at) {
            throw TemporalOrderError("event at " + e.timestamp.to_iso8601() +
                                     " is newer than the profile instant " + at.to_iso8601());
        }
        const double age = (at - e.timestamp).count_seconds();
        const double w = std::exp(-tedium_coefficient * age);
        if (w > 0.0) {
            profile.weights[e.tag] += w;
        }
    }
    // An underflowed ensemble can still leave an exact zero.
    for (auto it = profile.weights.begin(); it != profile.weights.end();) {
        it = it->second == 0.0 ? profile.weights.erase(it) : std::next(it);
    }
    return profile;
}

double similarity(const TagProfile& a, const TagProfile& b) {
    if (a.weights.empty() || b.weights.empty()) {
        return 0.0;
    }

    double dot = 0.0;
    for (const auto& [tag, wa] : a.weights) {
        const auto it = b.weights.find(tag);
        if (it != b.weights.end()) {
            dot += wa * it->second;
        }
    }
    if (dot == 0.0) {
        return 0.0;
    }

    double na = 0.0, nb = 0.0;
    for (const auto& [tag, w] : a.weights) na += w * w;
    for (const auto& [tag, w] : b.weights) nb += w * w;

    const double s = dot / (std::sqrt(na) * std::sqrt(nb));
    return std::clamp(s, 0.0, 1.0);
}

double drift(const std::vector<TaggingEvent>& events, const std::string& user_id,
             double tedium_coefficient, TimeInstant t1, TimeInstant t2) {
    if (t1 >= t2) {
        throw ArgumentError("drift needs t1 < t2");
    }
    std::vector<TaggingEvent> up_to_t1, up_to_t2;
    for (const auto& e : events) {
        if (e.user_id != user_id) continue;
        if (e.timestamp <= t1) up_to_t1.push_back(e);
        if (e.timestamp <= t2) up_to_t2.push_back(e);
    }
    const TagProfile p1 = build_profile(up_to_t1, user_id, tedium_coefficient, t1);
    const TagProfile p2 = build_profile(up_to_t2, user_id, tedium_coefficient, t2);
    return 1.0 - similarity(p1, p2);
}

}  // namespace tagdecay
