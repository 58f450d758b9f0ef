#pragma once

#include "json.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace xlag::cli {

enum class Status { Pass, Fail, Skip };
std::string status_name(Status s);  // "pass", "fail", "skip"

struct Record {
    std::string name;
    Status status = Status::Pass;
    std::string details;
};

enum class Format { Text, Json, Csv };
Format parse_format(const std::string& s);

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<Record> records;
    // Command-specific payload, always a JSON object.
    nlohmann::ordered_json data = nlohmann::ordered_json::object();
    // Plain-text body printed before the record list.
    std::string text;
    std::optional<double> seconds;

    void add(std::string name, bool ok, std::string details = {});
    bool passed() const;  // no record failed
    void sort_records();  // by name, stable
};

nlohmann::ordered_json to_json(const Report& r);
void write_text(const Report& r, std::ostream& os, bool color);
void write_csv(const Report& r, std::ostream& os);  // name,status,details

// Double-quoted CSV field when needed.
std::string csv_field(const std::string& s);

} // namespace xlag::cli
