#include "ganova/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string_view>
#include <unordered_map>

#include "ganova/errors.hpp"

namespace ganova {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            return fields;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
}

bool is_missing(std::string_view token) {
    return token.empty() || token == "NA" || token == "na" || token == "NaN";
}

}  // namespace

GroupedData parse_long_csv(const std::string& text, const std::string& group_col,
                           const std::string& value_col) {
    std::string_view rest(text);
    std::size_t line_no = 0;

    auto next_line = [&](std::string_view& out) {
        if (rest.empty()) return false;
        const std::size_t nl = rest.find('\n');
        if (nl == std::string_view::npos) {
            out = rest;
            rest = {};
        } else {
            out = rest.substr(0, nl);
            rest.remove_prefix(nl + 1);
        }
        line_no++;
        return true;
    };

    std::string_view header;
    if (!next_line(header) || trim(header).empty())
        throw DataError("empty document: expected a CSV header row");

    const std::vector<std::string_view> names = split_fields(header);
    std::size_t group_idx = names.size(), value_idx = names.size();
    for (std::size_t i = 0; i < names.size(); i++) {
        if (names[i] == group_col) group_idx = i;
        if (names[i] == value_col) value_idx = i;
    }
    if (group_idx == names.size())
        throw DataError("header has no '" + group_col + "' column");
    if (value_idx == names.size())
        throw DataError("header has no '" + value_col + "' column");

    GroupedData data;
    std::unordered_map<std::string, std::size_t> index;
    std::string_view line;
    while (next_line(line)) {
        if (trim(line).empty()) continue;
        const std::vector<std::string_view> fields = split_fields(line);
        if (fields.size() <= std::max(group_idx, value_idx))
            throw DataError("row " + std::to_string(line_no) + ": too few columns");
        const std::string_view token = fields[value_idx];
        if (is_missing(token)) continue;
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw DataError("row " + std::to_string(line_no) + ": unparseable value '" +
                            std::string(token) + "'");
        const std::string label(fields[group_idx]);
        auto [it, inserted] = index.try_emplace(label, data.groups.size());
        if (inserted) data.groups.push_back(Group{label, {}});
        data.groups[it->second].values.push_back(value);
    }

    if (data.groups.size() < 2)
        throw DataError("need at least 2 groups with observations, got " +
                        std::to_string(data.groups.size()));
    return data;
}

Summaries group_summaries(const GroupedData& data) {
    Summaries out;
    double total = 0.0;
    for (const Group& g : data.groups) {
        GroupSummary s;
        s.label = g.label;
        s.n = g.values.size();
        double sum = 0.0;
        for (double v : g.values) sum += v;
        s.mean = sum / static_cast<double>(s.n);
        if (s.n >= 2) {
            double ss = 0.0;
            for (double v : g.values) ss += (v - s.mean) * (v - s.mean);
            s.variance = ss / static_cast<double>(s.n - 1);
        }
        total += sum;
        out.n_t += s.n;
        out.groups.push_back(std::move(s));
    }
    out.grand_mean = total / static_cast<double>(out.n_t);
    return out;
}

GroupedData transform(const GroupedData& data, Transform kind) {
    if (kind == Transform::none) return data;
    GroupedData out = data;
    for (Group& g : out.groups) {
        for (std::size_t i = 0; i < g.values.size(); i++) {
            const double v = g.values[i];
            if (kind == Transform::sqrt) {
                if (v < 0.0)
                    throw DataError("sqrt transform: negative value in group '" + g.label +
                                    "' at position " + std::to_string(i + 1));
                g.values[i] = std::sqrt(v);
            } else {
                if (v <= 0.0)
                    throw DataError("log transform: non-positive value in group '" + g.label +
                                    "' at position " + std::to_string(i + 1));
                g.values[i] = std::log(v);
            }
        }
    }
    return out;
}

DesignDims design_dims(const GroupedData& data) {
    std::vector<std::size_t> sizes;
    sizes.reserve(data.groups.size());
    for (const Group& g : data.groups) sizes.push_back(g.values.size());
    return DesignDims(std::move(sizes));
}

GroupedData sort_groups(const GroupedData& data) {
    GroupedData out = data;
    std::sort(out.groups.begin(), out.groups.end(),
              [](const Group& a, const Group& b) { return a.label < b.label; });
    return out;
}

}  // namespace ganova
