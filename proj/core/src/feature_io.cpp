#include "glyphgeom/feature_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "glyphgeom/errors.hpp"

namespace glyphgeom {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string json_escape(const std::string& s) {
    return nlohmann::json(s).dump();
}

void check_feature_count(size_t n, size_t line_no) {
    if (n != kFeatureCount)
        throw ParseError("feature record has " + std::to_string(n) + " values, expected " +
                             std::to_string(kFeatureCount),
                         line_no);
}

} // namespace

// The writer is hand-rolled so floats always carry 17 significant
// digits; a JSON library would emit shortest-round-trip forms instead.
std::string to_jsonl_line(const FeatureVector& fv) {
    std::string out = "{\"label\": " + json_escape(fv.label) +
                      ", \"source\": " + json_escape(fv.source) + ", \"features\": [";
    for (size_t i = 0; i < fv.values.size(); ++i) {
        if (i) out += ", ";
        out += format_double(fv.values[i]);
    }
    out += "]}";
    return out;
}

void write_jsonl(std::ostream& os, const std::vector<FeatureVector>& records) {
    for (const FeatureVector& fv : records) os << to_jsonl_line(fv) << '\n';
}

std::vector<FeatureVector> read_jsonl(std::istream& is) {
    std::vector<FeatureVector> out;
    std::string line;
    size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("features") ||
            !j["features"].is_array())
            throw ParseError("bad feature record", line_no);
        FeatureVector fv;
        fv.label = j.value("label", std::string{});
        fv.source = j.value("source", std::string{});
        fv.values = j["features"].get<std::vector<double>>();
        check_feature_count(fv.values.size(), line_no);
        out.push_back(std::move(fv));
    }
    return out;
}

std::string csv_header() {
    std::string h = "label";
    for (int i = 0; i < kFeatureCount; ++i) {
        char buf[8];
        std::snprintf(buf, sizeof buf, ",f%03d", i);
        h += buf;
    }
    return h;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string to_csv_row(const FeatureVector& fv) {
    std::string row = csv_escape(fv.label);
    for (double v : fv.values) {
        row += ',';
        row += format_double(v);
    }
    return row;
}

void write_csv(std::ostream& os, const std::vector<FeatureVector>& records) {
    os << csv_header() << '\n';
    for (const FeatureVector& fv : records) os << to_csv_row(fv) << '\n';
}

std::vector<FeatureVector> read_csv(std::istream& is) {
    std::vector<FeatureVector> out;
    std::string line;
    size_t line_no = 0;
    if (!std::getline(is, line)) return out; // empty file: no records
    ++line_no;

    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        FeatureVector fv;
        size_t pos = 0;
        // label: possibly quoted
        if (!line.empty() && line.front() == '"') {
            std::string label;
            pos = 1;
            while (pos < line.size()) {
                if (line[pos] == '"') {
                    if (pos + 1 < line.size() && line[pos + 1] == '"') {
                        label += '"';
                        pos += 2;
                    } else {
                        ++pos;
                        break;
                    }
                } else {
                    label += line[pos++];
                }
            }
            fv.label = label;
            if (pos < line.size() && line[pos] == ',') ++pos;
        } else {
            const size_t comma = line.find(',');
            fv.label = line.substr(0, comma);
            pos = comma == std::string::npos ? line.size() : comma + 1;
        }

        while (pos <= line.size() && pos != 0 && pos - 1 < line.size()) {
            const size_t comma = line.find(',', pos);
            const std::string tok =
                line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty()) throw ParseError("empty CSV field", line_no);
            try {
                fv.values.push_back(std::stod(tok));
            } catch (const std::exception&) {
                throw ParseError("bad CSV number '" + tok + "'", line_no);
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        check_feature_count(fv.values.size(), line_no);
        out.push_back(std::move(fv));
    }
    return out;
}

std::vector<FeatureVector> read_feature_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open file: " + path);
    const bool csv = path.size() > 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
    return csv ? read_csv(file) : read_jsonl(file);
}

} // namespace glyphgeom
