#include "coho/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace coho {

namespace {

std::string pad(const std::string& s, size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
}

void print_rows(std::ostringstream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            line += c + 1 == row.size() ? row[c] : pad(row[c], widths[c]);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << "  " << line << "\n";
    }
}

} // namespace

std::string render_table(const ReportDoc& doc) {
    std::ostringstream out;
    out << doc.command << "\n";
    for (const auto& [k, v] : doc.meta) out << "  " << k << ": " << v << "\n";
    if (doc.dims) {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"degree", "dim"});
        for (size_t i = 0; i < doc.dims->dims.size(); ++i)
            rows.push_back({std::to_string(doc.dims->start_degree + static_cast<int>(i)),
                            std::to_string(doc.dims->dims[i])});
        print_rows(out, rows);
    }
    for (const auto& [k, v] : doc.scalars) out << "  " << k << " = " << v << "\n";
    for (const auto& [name, grid] : doc.grids) {
        out << "  " << name << "\n";
        std::vector<std::vector<std::string>> rows;
        size_t nq = 0;
        for (const auto& r : grid) nq = std::max(nq, r.size());
        std::vector<std::string> head{"p\\q"};
        for (size_t q = 0; q < nq; ++q) head.push_back(std::to_string(q));
        rows.push_back(head);
        for (size_t p = 0; p < grid.size(); ++p) {
            std::vector<std::string> row{std::to_string(p)};
            for (long v : grid[p]) row.push_back(std::to_string(v));
            rows.push_back(row);
        }
        print_rows(out, rows);
    }
    for (const auto& rep : doc.checks) {
        out << "  " << rep.name << "\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : rep.rows) {
            std::string values;
            if (row.lhs && row.rhs)
                values = std::to_string(*row.lhs) + " vs " + std::to_string(*row.rhs);
            else if (row.lhs)
                values = std::to_string(*row.lhs);
            rows.push_back({row.label, row.ok ? "pass" : "fail", values, row.note});
        }
        print_rows(out, rows);
    }
    for (const auto& b : doc.blocks) out << b << (b.empty() || b.back() == '\n' ? "" : "\n");
    if (doc.verdict) out << "verdict: " << *doc.verdict << "\n";
    return out.str();
}

std::string render_json(const ReportDoc& doc) {
    using nlohmann::json;
    json root;
    root["command"] = doc.command;
    json meta = json::object();
    for (const auto& [k, v] : doc.meta) meta[k] = v;
    root["meta"] = std::move(meta);
    if (!doc.scalars.empty()) {
        json sc = json::object();
        for (const auto& [k, v] : doc.scalars) sc[k] = v;
        root["scalars"] = std::move(sc);
    }
    if (doc.dims)
        root["dims"] = {{"start", doc.dims->start_degree}, {"dims", doc.dims->dims}};
    if (!doc.grids.empty()) {
        json gr = json::object();
        for (const auto& [name, grid] : doc.grids) gr[name] = grid;
        root["grids"] = std::move(gr);
    }
    if (!doc.checks.empty()) {
        json checks = json::array();
        for (const auto& rep : doc.checks) {
            json rows = json::array();
            for (const auto& row : rep.rows) {
                json r = {{"label", row.label}, {"ok", row.ok}};
                if (row.lhs) r["lhs"] = *row.lhs;
                if (row.rhs) r["rhs"] = *row.rhs;
                if (!row.note.empty()) r["note"] = row.note;
                rows.push_back(std::move(r));
            }
            checks.push_back({{"name", rep.name},
                              {"rows", std::move(rows)},
                              {"verdict", rep.pass() ? "pass" : "fail"}});
        }
        root["checks"] = std::move(checks);
    }
    if (doc.object_json) root["object"] = json::parse(*doc.object_json);
    if (doc.verdict) root["verdict"] = *doc.verdict;
    return root.dump(2) + "\n";
}

} // namespace coho
