#include "ncproj/report.hpp"

#include <sstream>
#include <vector>

#include "ncproj/errors.hpp"

namespace ncproj {

ReportFormat parse_format(const std::string& name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    throw Error("unknown report format: " + name);
}

Json report_json(const Report& r) {
    Json j = Json::object();
    j["schema"] = 1;
    j["command"] = r.command;
    j["seed"] = r.seed;
    j["verdict"] = r.verdict;
    for (const auto& [k, v] : r.body.items()) j[k] = v;
    return j;
}

namespace {

bool is_table(const Json& v) { return v.is_array() && !v.empty() && v.front().is_object(); }

bool is_scalar(const Json& v) {
    return v.is_string() || v.is_number() || v.is_boolean() || v.is_null();
}

std::string plain(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string csv_cell(const Json& v) {
    std::string s = plain(v);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void csv_walk(std::ostringstream& os, const std::string& key, const Json& v) {
    if (is_table(v)) {
        os << "table," << csv_cell(key) << "," << v.size() << "\n";
        std::vector<std::string> cols;
        for (const auto& [c, cv] : v.front().items()) {
            (void)cv;
            cols.push_back(c);
        }
        for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_cell(cols[i]);
        os << "\n";
        for (const auto& row : v) {
            for (std::size_t i = 0; i < cols.size(); ++i) {
                if (i) os << ",";
                auto it = row.find(cols[i]);
                os << (it == row.end() ? "" : csv_cell(*it));
            }
            os << "\n";
        }
    } else if (v.is_array()) {
        os << csv_cell(key);
        for (const auto& e : v) os << "," << csv_cell(e);
        os << "\n";
    } else if (v.is_object()) {
        for (const auto& [k, sub] : v.items()) csv_walk(os, key + "." + k, sub);
    } else {
        os << csv_cell(key) << "," << csv_cell(v) << "\n";
    }
}

void text_inline(std::ostringstream& os, const Json& v) {
    if (is_scalar(v)) {
        os << plain(v);
    } else if (v.is_array()) {
        bool first = true;
        for (const auto& e : v) {
            if (!first) os << ", ";
            first = false;
            text_inline(os, e);
        }
    } else {
        bool first = true;
        for (const auto& [k, sub] : v.items()) {
            if (!first) os << " ";
            first = false;
            os << k << "=";
            text_inline(os, sub);
        }
    }
}

void text_walk(std::ostringstream& os, const std::string& key, const Json& v) {
    if (is_table(v)) {
        std::vector<std::string> cols;
        for (const auto& [c, cv] : v.front().items()) {
            (void)cv;
            cols.push_back(c);
        }
        std::vector<std::vector<std::string>> cells;
        cells.push_back(cols);
        for (const auto& row : v) {
            std::vector<std::string> line;
            for (const auto& c : cols) {
                auto it = row.find(c);
                std::ostringstream cell;
                if (it != row.end()) text_inline(cell, *it);
                line.push_back(cell.str());
            }
            cells.push_back(std::move(line));
        }
        std::vector<std::size_t> width(cols.size(), 0);
        for (const auto& line : cells)
            for (std::size_t i = 0; i < line.size(); ++i)
                width[i] = std::max(width[i], line[i].size());
        os << key << ":\n";
        for (const auto& line : cells) {
            os << " ";
            for (std::size_t i = 0; i < line.size(); ++i) {
                os << " " << line[i];
                if (i + 1 < line.size()) os << std::string(width[i] - line[i].size(), ' ');
            }
            os << "\n";
        }
    } else {
        std::ostringstream val;
        text_inline(val, v);
        os << key << ": " << val.str() << "\n";
    }
}

} // namespace

std::string emit_report(const Report& r, ReportFormat format) {
    Json doc = report_json(r);
    if (format == ReportFormat::Json) return doc.dump(2) + "\n";

    std::ostringstream os;
    if (format == ReportFormat::Csv) {
        for (const auto& [k, v] : doc.items()) csv_walk(os, k, v);
        return os.str();
    }
    for (const auto& [k, v] : doc.items()) text_walk(os, k, v);
    return os.str();
}

Report parse_report(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(1, static_cast<int>(e.byte), "invalid report json");
    }
    if (!doc.is_object() || !doc.contains("schema") || doc["schema"] != 1)
        throw Error("unsupported report schema");
    Report r;
    r.command = doc.value("command", std::string());
    r.seed = doc.value("seed", std::uint64_t{0});
    r.verdict = doc.value("verdict", std::string());
    for (const auto& [k, v] : doc.items())
        if (k != "schema" && k != "command" && k != "seed" && k != "verdict") r.body[k] = v;
    return r;
}

} // namespace ncproj
