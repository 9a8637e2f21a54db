#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ganova/distributions.hpp"

namespace ganova {

struct Group {
    std::string label;
    std::vector<double> values;
};

// Labeled groups in order of first appearance; labels unique, every group
// holds at least one retained (non-missing) observation.
struct GroupedData {
    std::vector<Group> groups;
};

struct GroupSummary {
    std::string label;
    std::size_t n = 0;
    double mean = 0.0;
    std::optional<double> variance;  // sample variance (n-1 divisor), needs n >= 2
};

struct Summaries {
    std::vector<GroupSummary> groups;
    std::size_t n_t = 0;
    double grand_mean = 0.0;  // pooled mean of all observations
};

enum class Transform { none, sqrt, log };

// Parses "group,value" long-format CSV. Rows whose value is empty, "NA",
// "na" or "NaN" are dropped; anything else must parse as a decimal number.
// Column names are matched against the header; extra columns are ignored.
GroupedData parse_long_csv(const std::string& text, const std::string& group_col = "group",
                           const std::string& value_col = "value");

Summaries group_summaries(const GroupedData& data);

// Element-wise transform; sqrt needs all values >= 0, log needs > 0.
GroupedData transform(const GroupedData& data, Transform kind);

// Group sizes of the data as a validated design.
DesignDims design_dims(const GroupedData& data);

// Reorders groups lexicographically by label.
GroupedData sort_groups(const GroupedData& data);

}  // namespace ganova
