#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

namespace ncproj {

using Json = nlohmann::ordered_json;

enum class ReportFormat { Text, Json, Csv };

/// Result of one CLI run. The fixed fields pin the layout; body carries the
/// command-specific payload in insertion order, so identical runs emit
/// byte-identical documents.
struct Report {
    std::string command;          // re-runnable command line
    std::uint64_t seed = 0;
    std::string verdict = "pass"; // pass | fail
    Json body = Json::object();

    bool operator==(const Report& o) const {
        return command == o.command && seed == o.seed && verdict == o.verdict && body == o.body;
    }
};

/// "text", "json" or "csv".
ReportFormat parse_format(const std::string& name);

/// Full document: schema, command, seed, verdict, then the body keys.
Json report_json(const Report& r);

std::string emit_report(const Report& r, ReportFormat format);

/// Inverse of emit_report(..., Json): emit then parse gives back an equal
/// Report. ParseError on malformed input, Error on a schema mismatch.
Report parse_report(const std::string& text);

} // namespace ncproj
