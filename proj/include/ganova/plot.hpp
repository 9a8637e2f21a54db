#pragma once

#include <string>

#include "ganova/ganova.hpp"

namespace ganova {

enum class ChartMode { p_scale, k_scale };

struct ChartSpec {
    ChartMode mode = ChartMode::k_scale;
    double width = 640.0;
    double height = 480.0;
    std::string title;
};

// Standalone SVG: one stem and marker per group over a dashed decision-limit
// line. p_scale plots 1 - p_adj against the horizontal limit 1 - alpha;
// k_scale plots k_adj against the per-group limits (drawn as one line when
// they coincide). Output is deterministic: same result, same bytes.
std::string render_chart(const GanovaResult& result, const ChartSpec& spec);

}  // namespace ganova
