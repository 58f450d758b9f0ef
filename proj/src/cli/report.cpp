#include "xlag/cli/report.hpp"

#include "xlag/core/error.hpp"

#include <algorithm>
#include <cstdio>

namespace xlag::cli {

std::string status_name(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
    }
    return "";
}

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw DomainError("unknown format '" + s + "' (expected text, json or csv)");
}

void Report::add(std::string name, bool ok, std::string details) {
    records.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(details)});
}

bool Report::passed() const {
    return std::none_of(records.begin(), records.end(), [](const Record& r) { return r.status == Status::Fail; });
}

void Report::sort_records() {
    std::stable_sort(records.begin(), records.end(), [](const Record& a, const Record& b) { return a.name < b.name; });
}

nlohmann::ordered_json to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = params;
    j["status"] = r.passed() ? "pass" : "fail";
    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (const auto& rec : r.records)
        recs.push_back({{"name", rec.name}, {"status", status_name(rec.status)}, {"details", rec.details}});
    j["records"] = recs;
    j["data"] = r.data;
    if (r.seconds) j["seconds"] = *r.seconds;
    return j;
}

void write_text(const Report& r, std::ostream& os, bool color) {
    if (!r.text.empty()) os << r.text;
    if (r.records.empty()) return;
    int pass = 0, fail = 0, skip = 0;
    for (const auto& rec : r.records) {
        std::string tag;
        switch (rec.status) {
        case Status::Pass:
            tag = color ? "\033[32mPASS\033[0m" : "PASS";
            ++pass;
            break;
        case Status::Fail:
            tag = color ? "\033[31mFAIL\033[0m" : "FAIL";
            ++fail;
            break;
        case Status::Skip:
            tag = "SKIP";
            ++skip;
            break;
        }
        os << tag << "  " << rec.name;
        if (!rec.details.empty()) os << "  " << rec.details;
        os << '\n';
    }
    os << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
    if (r.seconds) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f", *r.seconds);
        os << "time " << buf << " s\n";
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void write_csv(const Report& r, std::ostream& os) {
    os << "name,status,details\n";
    for (const auto& rec : r.records)
        os << csv_field(rec.name) << ',' << status_name(rec.status) << ',' << csv_field(rec.details) << '\n';
}

} // namespace xlag::cli
