#pragma once

#include <optional>
#include <string>
#include <vector>

namespace coho {

// Uniform pass/fail evidence table used by axiom validators and theorem
// checks alike. A report passes iff every row is ok.
struct CheckReport {
    struct Row {
        std::string label;
        bool ok = true;
        std::optional<long> lhs;
        std::optional<long> rhs;
        std::string note;
    };

    std::string name;
    std::vector<Row> rows;

    bool pass() const {
        for (const Row& r : rows)
            if (!r.ok) return false;
        return true;
    }

    void add(const std::string& label, bool ok, const std::string& note = "") {
        rows.push_back(Row{label, ok, std::nullopt, std::nullopt, note});
    }

    void add_cmp(const std::string& label, long lhs, long rhs, const std::string& note = "") {
        rows.push_back(Row{label, lhs == rhs, lhs, rhs, note});
    }
};

// Degree-indexed dimension table, the universal output of the derived
// functors.
struct GradedDims {
    int start_degree = 0;
    std::vector<long> dims;

    bool operator==(const GradedDims&) const = default;

    long at_degree(int n) const {
        long idx = n - start_degree;
        if (idx < 0 || idx >= static_cast<long>(dims.size())) return 0;
        return dims[idx];
    }
};

} // namespace coho
