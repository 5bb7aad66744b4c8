#include "tagdecay/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <istream>

#include <json.hpp>

#include "tagdecay/errors.hpp"

namespace tagdecay {

std::vector<TaggingEvent> simulate_user(const UserStreamSpec& spec, Rng& rng) {
    if (spec.tags.empty()) {
        throw ArgumentError("tag vocabulary is empty");
    }
    const double horizon = spec.horizon.count_seconds();
    if (!std::isfinite(horizon) || horizon <= 0.0) {
        throw ArgumentError("horizon must be positive and finite");
    }
    if (!std::isfinite(spec.lambda0) || spec.lambda0 < 0.0) {
        throw ArgumentError("lambda0 must be non-negative and finite");
    }

    std::vector<TaggingEvent> events;
    const double rate_max = spec.lambda0 * spec.params.x0();  // lambda(0) bounds lambda(t)
    if (rate_max <= 0.0) {
        return events;
    }

    double t = 0.0;
    while (true) {
        t += rng.exponential(rate_max);
        if (t >= horizon) break;
        if (rng.uniform01() < std::exp(-spec.params.m() * t)) {
            TaggingEvent e;
            e.timestamp = spec.start + Duration::seconds(t);
            if (e.timestamp <= spec.start) {
                e.timestamp = TimeInstant::from_micros(spec.start.micros() + 1);
            }
            if ((e.timestamp - spec.start).count_seconds() >= horizon) continue;
            e.user_id = spec.user_id;
            e.object_id = spec.object_id;
            e.ontology_id = spec.ontology_id;
            e.tag = spec.tags[rng.index(spec.tags.size())];
            events.push_back(std::move(e));
        }
    }
    return events;
}

namespace {

std::string padded_id(const char* prefix, std::size_t index, std::size_t count) {
    std::size_t width = 1, n = count;
    while (n >= 10) {
        n /= 10;
        ++width;
    }
    std::string digits = std::to_string(index + 1);
    return prefix + std::string(width > digits.size() ? width - digits.size() : 0, '0') + digits;
}

}  // namespace

CohortResult simulate_cohort(const CohortSpec& spec) {
    if (spec.n_users == 0) {
        throw ArgumentError("cohort needs at least one user");
    }
    if (!std::isfinite(spec.horizon.count_seconds()) || spec.horizon.count_seconds() <= 0.0) {
        throw ArgumentError("horizon must be positive and finite");
    }
    if (!std::isfinite(spec.lambda0) || spec.lambda0 <= 0.0) {
        throw ArgumentError("lambda0 must be positive and finite");
    }
    if (spec.tags_per_user == 0) {
        throw ArgumentError("each user needs at least one tag");
    }
    if (!(spec.x0_range.first <= spec.x0_range.second) || spec.x0_range.first < 0.0 ||
        !std::isfinite(spec.x0_range.second)) {
        throw ArgumentError("invalid x0 range");
    }
    if (!(spec.m_range.first <= spec.m_range.second) || !(spec.m_range.first > 0.0) ||
        !std::isfinite(spec.m_range.second)) {
        throw ArgumentError("m range must be positive, finite and ordered");
    }

    CohortResult result;
    result.truth.reserve(spec.n_users);
    for (std::size_t i = 0; i < spec.n_users; ++i) {
        Rng rng(derive_stream_seed(spec.seed, i));

        UserTruth truth;
        truth.user_id = padded_id("u", i, spec.n_users);
        truth.x0 = rng.uniform(spec.x0_range.first, spec.x0_range.second);
        truth.m = rng.uniform(spec.m_range.first, spec.m_range.second);
        truth.tags.reserve(spec.tags_per_user);
        for (std::size_t k = 0; k < spec.tags_per_user; ++k) {
            truth.tags.push_back(truth.user_id + "_t" + std::to_string(k));
        }

        UserStreamSpec user{truth.user_id,
                            spec.object_id,
                            kUnassignedOntology,
                            spec.start,
                            DecayParams(truth.x0, truth.m),
                            spec.lambda0,
                            spec.horizon,
                            truth.tags};
        auto stream = simulate_user(user, rng);
        result.events.insert(result.events.end(), std::make_move_iterator(stream.begin()),
                             std::make_move_iterator(stream.end()));
        result.truth.push_back(std::move(truth));
    }

    std::stable_sort(result.events.begin(), result.events.end(),
                     [](const TaggingEvent& a, const TaggingEvent& b) {
                         return a.timestamp < b.timestamp;
                     });
    return result;
}

std::string to_json(const GroundTruth& truth) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& u : truth) {
        j[u.user_id] = {{"x0", u.x0}, {"m", u.m}, {"tags", u.tags}};
    }
    return j.dump(2);
}

GroundTruth parse_ground_truth(std::istream& in) {
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        throw ArgumentError("ground truth is not a JSON object");
    }
    GroundTruth truth;
    for (const auto& [user, entry] : j.items()) {
        if (!entry.is_object() || !entry.contains("x0") || !entry.contains("m")) {
            throw ArgumentError("ground truth entry for '" + user + "' is malformed");
        }
        UserTruth u;
        u.user_id = user;
        u.x0 = entry["x0"].get<double>();
        u.m = entry["m"].get<double>();
        if (entry.contains("tags")) {
            u.tags = entry["tags"].get<std::vector<std::string>>();
        }
        truth.push_back(std::move(u));
    }
    return truth;
}

}  // namespace tagdecay
