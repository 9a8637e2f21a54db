#include "ganova/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ganova/errors.hpp"

namespace ganova {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_chart(const GanovaResult& result, const ChartSpec& spec) {
    if (!(spec.width > 0.0 && spec.height > 0.0))
        throw DomainError("render_chart: chart dimensions must be positive");

    const std::size_t G = result.labels.size();
    const bool k_scale = spec.mode == ChartMode::k_scale;

    std::vector<double> value(G), limit(G);
    for (std::size_t g = 0; g < G; g++) {
        value[g] = k_scale ? result.k_adj[g] : 1.0 - result.p_adj[g];
        limit[g] = k_scale ? result.dl_k[g] : result.dl_p;
    }

    double vmax = 1.0;
    if (k_scale) {
        vmax = 0.0;
        for (std::size_t g = 0; g < G; g++) vmax = std::max({vmax, value[g], limit[g]});
        vmax *= 1.15;
        if (vmax <= 0.0) vmax = 1.0;
    }

    const double left = 56.0, right = 16.0, top = 40.0, bottom = 44.0;
    const double plot_w = spec.width - left - right;
    const double plot_h = spec.height - top - bottom;
    const double y0 = top + plot_h;  // value 0
    auto x_of = [&](std::size_t g) {
        return left + (static_cast<double>(g) + 0.5) * plot_w / static_cast<double>(G);
    };
    auto y_of = [&](double v) { return top + (1.0 - v / vmax) * plot_h; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(spec.width) +
           "\" height=\"" + num(spec.height) + "\" viewBox=\"0 0 " + num(spec.width) + " " +
           num(spec.height) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + num(spec.width) + "\" height=\"" +
           num(spec.height) + "\" fill=\"white\"/>\n";
    if (!spec.title.empty())
        svg += "<text class=\"title\" x=\"" + num(spec.width / 2.0) +
               "\" y=\"22.00\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"15\">" +
               escape_xml(spec.title) + "</text>\n";

    // Axes and y ticks.
    svg += "<line class=\"axis\" x1=\"" + num(left) + "\" y1=\"" + num(top) + "\" x2=\"" +
           num(left) + "\" y2=\"" + num(y0) + "\" stroke=\"black\"/>\n";
    svg += "<line class=\"axis\" x1=\"" + num(left) + "\" y1=\"" + num(y0) + "\" x2=\"" +
           num(spec.width - right) + "\" y2=\"" + num(y0) + "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; t++) {
        const double v = vmax * static_cast<double>(t) / 4.0;
        const double y = y_of(v);
        svg += "<line class=\"tick\" x1=\"" + num(left - 4.0) + "\" y1=\"" + num(y) +
               "\" x2=\"" + num(left) + "\" y2=\"" + num(y) + "\" stroke=\"black\"/>\n";
        svg += "<text class=\"tick-label\" x=\"" + num(left - 8.0) + "\" y=\"" + num(y + 4.0) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               tick_label(v) + "</text>\n";
    }

    // Stems and markers, one per group.
    for (std::size_t g = 0; g < G; g++) {
        const double x = x_of(g);
        svg += "<line class=\"stem\" x1=\"" + num(x) + "\" y1=\"" + num(y0) + "\" x2=\"" +
               num(x) + "\" y2=\"" + num(y_of(value[g])) + "\" stroke=\"black\"/>\n";
    }

    // Decision limit: one dashed line when every group's limit agrees,
    // otherwise one dashed segment per group.
    const bool common_limit =
        std::all_of(limit.begin(), limit.end(),
                    [&](double l) { return std::fabs(l - limit[0]) <= 1e-9; });
    if (common_limit) {
        const double y = y_of(limit[0]);
        svg += "<line class=\"limit\" x1=\"" + num(left) + "\" y1=\"" + num(y) + "\" x2=\"" +
               num(spec.width - right) + "\" y2=\"" + num(y) +
               "\" stroke=\"firebrick\" stroke-dasharray=\"6 4\"/>\n";
    } else {
        const double half = 0.4 * plot_w / static_cast<double>(G);
        for (std::size_t g = 0; g < G; g++) {
            const double x = x_of(g);
            const double y = y_of(limit[g]);
            svg += "<line class=\"limit\" x1=\"" + num(x - half) + "\" y1=\"" + num(y) +
                   "\" x2=\"" + num(x + half) + "\" y2=\"" + num(y) +
                   "\" stroke=\"firebrick\" stroke-dasharray=\"6 4\"/>\n";
        }
    }

    for (std::size_t g = 0; g < G; g++) {
        const double x = x_of(g);
        const bool flagged = result.flags[g];
        svg += std::string("<circle class=\"marker") + (flagged ? " flag" : "") + "\" cx=\"" +
               num(x) + "\" cy=\"" + num(y_of(value[g])) + "\" r=\"4.00\" fill=\"" +
               (flagged ? "firebrick" : "black") + "\"/>\n";
    }

    for (std::size_t g = 0; g < G; g++) {
        svg += "<text class=\"label\" x=\"" + num(x_of(g)) + "\" y=\"" + num(y0 + 18.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
               escape_xml(result.labels[g]) + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace ganova
