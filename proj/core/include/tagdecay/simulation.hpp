#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tagdecay/decay.hpp"
#include "tagdecay/events.hpp"
#include "tagdecay/rng.hpp"
#include "tagdecay/time.hpp"

namespace tagdecay {

/// One synthetic user's event stream: an inhomogeneous Poisson process whose
/// rate lambda(t) = lambda0 * x0 * exp(-m t) tracks the interest curve, so
/// binned counts of the stream are an unbiased proxy for x(t).
struct UserStreamSpec {
    std::string user_id;
    std::string object_id = "text";
    std::string ontology_id = kUnassignedOntology;
    TimeInstant start = TimeInstant::epoch();
    DecayParams params;
    double lambda0 = 0.0;  // events per second at interest level 1
    Duration horizon;
    std::vector<std::string> tags;
};

/// Draws the stream by thinning against the bound lambda(0). Timestamps are
/// strictly inside (0, horizon) from `start`; each event's tag is drawn
/// uniformly from the vocabulary. Identical rng state gives an identical
/// stream. Throws ArgumentError on an empty vocabulary or non-positive
/// horizon.
std::vector<TaggingEvent> simulate_user(const UserStreamSpec& spec, Rng& rng);

/// Synthetic cohort description. Per-user parameters are drawn uniformly
/// from the given ranges; every derived quantity is a pure function of this
/// struct, seed included.
struct CohortSpec {
    std::size_t n_users = 20;
    Duration horizon = Duration::days(150);
    double lambda0 = 10.0 / 86400.0;  // events per second at interest 1
    std::pair<double, double> x0_range{1.0, 5.0};
    std::pair<double, double> m_range{0.02 / 86400.0, 0.1 / 86400.0};  // per second
    std::size_t tags_per_user = 5;
    std::uint64_t seed = 42;
    std::string object_id = "text";  // single shared object, the default protocol
    TimeInstant start = TimeInstant::epoch();
};

struct UserTruth {
    std::string user_id;
    double x0 = 0.0;
    double m = 0.0;  // per second
    std::vector<std::string> tags;
};

using GroundTruth = std::vector<UserTruth>;

struct CohortResult {
    std::vector<TaggingEvent> events;  // merged, non-decreasing in timestamp
    GroundTruth truth;                 // one entry per user, in user order
};

/// Generates every user's stream from a sub-seed derived as
/// derive_stream_seed(spec.seed, user_index), then merges by timestamp.
/// Per user the draw order is fixed: x0, then m, then the event stream.
/// Throws ArgumentError on invalid ranges or an empty cohort.
CohortResult simulate_cohort(const CohortSpec& spec);

/// Ground truth serialization: a JSON object keyed by user id with fields
/// x0, m (per second) and tags.
std::string to_json(const GroundTruth& truth);

/// Parses the to_json form back; throws ArgumentError on malformed input.
GroundTruth parse_ground_truth(std::istream& in);

}  // namespace tagdecay
