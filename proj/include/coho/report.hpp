#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coho/check_report.hpp"

// Uniform result document for every command. A command fills in whichever
// sections apply; the two renderers print the same numbers as an aligned
// table or as the machine mirror.

namespace coho {

struct ReportDoc {
    std::string command;
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::pair<std::string, long>> scalars;
    std::optional<GradedDims> dims;
    std::vector<CheckReport> checks;
    std::vector<std::pair<std::string, std::vector<std::vector<long>>>> grids;
    std::optional<std::string> verdict;
    // pre-serialized JSON object payload (emitted objects); table mode prints
    // the matching text blocks instead
    std::optional<std::string> object_json;
    std::vector<std::string> blocks;
};

std::string render_table(const ReportDoc& doc);
std::string render_json(const ReportDoc& doc);

} // namespace coho
