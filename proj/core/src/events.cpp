#include "tagdecay/events.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "tagdecay/errors.hpp"

namespace tagdecay {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

bool is_blank(const std::string& s) {
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// Splits one CSV record. Fields may be double-quoted; a doubled quote inside
// a quoted field is a literal quote. Returns false on unbalanced quoting.
bool split_csv(const std::string& line, std::vector<std::string>& fields) {
    fields.clear();
    std::string cur;
    bool quoted = false;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
        ++i;
    }
    if (quoted) return false;
    fields.push_back(cur);
    return true;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// Builds an event from raw field values shared by both formats. Returns an
// empty optional and fills `reason` if a field is invalid.
bool make_event(std::string timestamp, std::string user, std::string object,
                std::string tag, std::string ontology, TaggingEvent& out,
                std::string& reason) {
    try {
        out.timestamp = TimeInstant::from_iso8601(timestamp);
    } catch (const ArgumentError& e) {
        reason = e.what();
        return false;
    }
    if (user.empty()) {
        reason = "empty user_id";
        return false;
    }
    if (object.empty()) {
        reason = "empty object_id";
        return false;
    }
    out.tag = trim(tag);
    if (out.tag.empty()) {
        reason = "empty tag";
        return false;
    }
    out.user_id = std::move(user);
    out.object_id = std::move(object);
    out.ontology_id = ontology.empty() ? kUnassignedOntology : std::move(ontology);
    return true;
}

bool parse_csv_line(const std::string& line, TaggingEvent& out, std::string& reason) {
    std::vector<std::string> fields;
    if (!split_csv(line, fields)) {
        reason = "unbalanced quotes";
        return false;
    }
    if (fields.size() < 4 || fields.size() > 5) {
        reason = "expected 4 or 5 fields, got " + std::to_string(fields.size());
        return false;
    }
    std::string ontology = fields.size() == 5 ? fields[4] : std::string();
    return make_event(fields[0], fields[1], fields[2], fields[3], std::move(ontology),
                      out, reason);
}

bool parse_jsonl_line(const std::string& line, TaggingEvent& out, std::string& reason) {
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        reason = "not a JSON object";
        return false;
    }
    for (const char* key : {"timestamp", "user_id", "object_id", "tag"}) {
        if (!j.contains(key) || !j[key].is_string()) {
            reason = std::string("missing or non-string field '") + key + "'";
            return false;
        }
    }
    std::string ontology;
    if (j.contains("ontology_id")) {
        if (!j["ontology_id"].is_string()) {
            reason = "non-string field 'ontology_id'";
            return false;
        }
        ontology = j["ontology_id"].get<std::string>();
    }
    return make_event(j["timestamp"].get<std::string>(), j["user_id"].get<std::string>(),
                      j["object_id"].get<std::string>(), j["tag"].get<std::string>(),
                      std::move(ontology), out, reason);
}

}  // namespace

std::string LineDiagnostic::to_string() const {
    return "line " + std::to_string(line) + ": " + reason;
}

ParseResult parse_events(std::istream& input, EventFormat format) {
    if (!input.good() && !input.eof()) {
        throw IoError("input stream is not readable");
    }

    ParseResult result;
    std::string line;
    std::size_t line_no = 0;
    std::size_t considered = 0;
    bool first_content_line = true;

    while (std::getline(input, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_blank(line)) continue;

        if (first_content_line && format == EventFormat::Csv &&
            line.rfind("timestamp,", 0) == 0) {
            first_content_line = false;
            continue;  // header
        }
        first_content_line = false;

        ++considered;
        TaggingEvent event;
        std::string reason;
        const bool ok = format == EventFormat::Csv ? parse_csv_line(line, event, reason)
                                                   : parse_jsonl_line(line, event, reason);
        if (ok) {
            result.events.push_back(std::move(event));
        } else {
            result.diagnostics.push_back({line_no, std::move(reason)});
        }
    }
    if (input.bad()) {
        throw IoError("read failure after line " + std::to_string(line_no));
    }

    if (considered > 0 && result.diagnostics.size() * 2 > considered) {
        throw CorpusFormatError(std::to_string(result.diagnostics.size()) + " of " +
                                std::to_string(considered) +
                                " lines malformed; is the input really " +
                                (format == EventFormat::Csv ? "CSV" : "JSONL") + "?");
    }
    return result;
}

ParseResult parse_events_file(const std::string& path, EventFormat format) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    return parse_events(in, format);
}

void write_csv(const std::vector<TaggingEvent>& events, std::ostream& out) {
    out << "timestamp,user_id,object_id,tag,ontology_id\n";
    for (const auto& e : events) {
        out << e.timestamp.to_iso8601() << ',' << csv_escape(e.user_id) << ','
            << csv_escape(e.object_id) << ',' << csv_escape(e.tag) << ','
            << csv_escape(e.ontology_id) << '\n';
    }
}

void write_jsonl(const std::vector<TaggingEvent>& events, std::ostream& out) {
    for (const auto& e : events) {
        nlohmann::json j{{"timestamp", e.timestamp.to_iso8601()},
                         {"user_id", e.user_id},
                         {"object_id", e.object_id},
                         {"tag", e.tag},
                         {"ontology_id", e.ontology_id}};
        out << j.dump() << '\n';
    }
}

}  // namespace tagdecay
