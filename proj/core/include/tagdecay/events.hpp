#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tagdecay/time.hpp"

namespace tagdecay {

/// Scope value used when an event carries no ontology assignment.
inline constexpr const char* kUnassignedOntology = "_none";

/// One timestamped assignment of a tag to a Web object by a user; the raw
/// observable everything else is computed from.
struct TaggingEvent {
    TimeInstant timestamp;
    std::string user_id;
    std::string object_id;
    std::string tag;
    std::string ontology_id = kUnassignedOntology;

    bool operator==(const TaggingEvent&) const = default;
};

enum class EventFormat { Csv, Jsonl };

/// One skipped input line and why it was skipped.
struct LineDiagnostic {
    std::size_t line;  // 1-based
    std::string reason;

    /// Formats as "line <n>: <reason>".
    std::string to_string() const;
};

struct ParseResult {
    std::vector<TaggingEvent> events;       // input order preserved
    std::vector<LineDiagnostic> diagnostics;
};

/// Parses a line-oriented event log.
///
/// CSV column order is timestamp,user_id,object_id,tag,ontology_id with
/// RFC-style quoting; a header line is detected and skipped. JSONL holds one
/// object per line with those exact field names. The ontology column/field
/// may be absent or empty, in which case the event gets "_none".
///
/// Well-formed lines become events; malformed lines become diagnostics and
/// are skipped. If more than half of the non-blank lines are malformed the
/// whole corpus is rejected with CorpusFormatError.
ParseResult parse_events(std::istream& input, EventFormat format);

/// Opens and parses a file; throws IoError if it cannot be read.
ParseResult parse_events_file(const std::string& path, EventFormat format);

/// Writes the canonical CSV form, header line included.
void write_csv(const std::vector<TaggingEvent>& events, std::ostream& out);

/// Writes one JSON object per line.
void write_jsonl(const std::vector<TaggingEvent>& events, std::ostream& out);

}  // namespace tagdecay
