#include "ganova/adjust.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ganova/errors.hpp"

namespace ganova {

namespace {

// Indices that sort p ascending; stable, so ties keep input order.
std::vector<std::size_t> sort_order(const std::vector<double>& p) {
    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return p[a] < p[b]; });
    return order;
}

// Step-down: running max of scale(i) * p_(i) over ascending i.
std::vector<double> step_down(const std::vector<double>& p, const std::vector<double>& scale) {
    const std::vector<std::size_t> order = sort_order(p);
    std::vector<double> adj(p.size());
    double running = 0.0;
    for (std::size_t i = 0; i < order.size(); i++) {
        running = std::max(running, std::min(1.0, scale[i] * p[order[i]]));
        adj[order[i]] = running;
    }
    return adj;
}

// Step-up: running min of scale(i) * p_(i) over descending i.
std::vector<double> step_up(const std::vector<double>& p, const std::vector<double>& scale) {
    const std::vector<std::size_t> order = sort_order(p);
    std::vector<double> adj(p.size());
    double running = 1.0;
    for (std::size_t i = order.size(); i-- > 0;) {
        running = std::min(running, std::min(1.0, scale[i] * p[order[i]]));
        adj[order[i]] = running;
    }
    return adj;
}

std::vector<double> hochberg(const std::vector<double>& p) {
    const std::size_t m = p.size();
    std::vector<double> scale(m);
    for (std::size_t i = 0; i < m; i++) scale[i] = static_cast<double>(m - i);
    return step_up(p, scale);
}

// Hommel's stagewise algorithm over the sorted p. Stage m = n-1 .. 2 refines
// the simultaneous Simes bound; equivalent to closed testing with Simes
// local tests (the brute-force subset oracle in the tests checks this).
std::vector<double> hommel(const std::vector<double>& p) {
    const std::size_t n = p.size();
    if (n == 2) return hochberg(p);  // stage loop is empty; the procedures coincide
    const std::vector<std::size_t> order = sort_order(p);
    std::vector<double> ps(n);
    for (std::size_t i = 0; i < n; i++) ps[i] = p[order[i]];

    double q_min = 1.0;
    for (std::size_t i = 0; i < n; i++)
        q_min = std::min(q_min, static_cast<double>(n) * ps[i] / static_cast<double>(i + 1));
    std::vector<double> q(n, q_min), pa(n, q_min);

    for (std::size_t m = n - 1; m >= 2; m--) {
        const double md = static_cast<double>(m);
        double q1 = 1.0;
        for (std::size_t j = 0; j < m - 1; j++)           // tail indices n-m+1 .. n-1
            q1 = std::min(q1, md * ps[n - m + 1 + j] / static_cast<double>(j + 2));
        for (std::size_t i = 0; i <= n - m; i++)          // head indices 0 .. n-m
            q[i] = std::min(md * ps[i], q1);
        for (std::size_t i = n - m + 1; i < n; i++) q[i] = q[n - m];
        for (std::size_t i = 0; i < n; i++) pa[i] = std::max(pa[i], q[i]);
    }

    std::vector<double> adj(n);
    for (std::size_t i = 0; i < n; i++) adj[order[i]] = std::min(1.0, std::max(pa[i], ps[i]));
    return adj;
}

}  // namespace

double per_test_alpha(double alpha_pf, std::size_t G, AlphaScheme scheme) {
    if (!(alpha_pf > 0.0 && alpha_pf < 1.0))
        throw DomainError("per_test_alpha: alpha must lie in (0,1)");
    if (G < 1) throw DomainError("per_test_alpha: G must be >= 1");
    if (scheme == AlphaScheme::sidak)
        return -std::expm1(std::log1p(-alpha_pf) / static_cast<double>(G));
    return alpha_pf / static_cast<double>(G);
}

std::vector<double> adjust_p(const std::vector<double>& p, AdjustMethod method) {
    if (p.empty()) throw DomainError("adjust_p: need at least one p-value");
    for (double v : p)
        if (!(v >= 0.0 && v <= 1.0))
            throw DomainError("adjust_p: p-values must lie in [0,1]");
    const std::size_t m = p.size();
    if (m == 1) return p;
    const double md = static_cast<double>(m);

    switch (method) {
        case AdjustMethod::bonferroni: {
            std::vector<double> adj(m);
            for (std::size_t i = 0; i < m; i++) adj[i] = std::min(1.0, md * p[i]);
            return adj;
        }
        case AdjustMethod::sidak: {
            std::vector<double> adj(m);
            for (std::size_t i = 0; i < m; i++) adj[i] = -std::expm1(md * std::log1p(-p[i]));
            return adj;
        }
        case AdjustMethod::holm: {
            std::vector<double> scale(m);
            for (std::size_t i = 0; i < m; i++) scale[i] = static_cast<double>(m - i);
            return step_down(p, scale);
        }
        case AdjustMethod::hochberg:
            return hochberg(p);
        case AdjustMethod::hommel:
            return hommel(p);
        case AdjustMethod::bh: {
            std::vector<double> scale(m);
            for (std::size_t i = 0; i < m; i++) scale[i] = md / static_cast<double>(i + 1);
            return step_up(p, scale);
        }
        case AdjustMethod::by: {
            double harmonic = 0.0;
            for (std::size_t j = 1; j <= m; j++) harmonic += 1.0 / static_cast<double>(j);
            std::vector<double> scale(m);
            for (std::size_t i = 0; i < m; i++)
                scale[i] = harmonic * md / static_cast<double>(i + 1);
            return step_up(p, scale);
        }
    }
    throw DomainError("adjust_p: unknown method");
}

std::optional<AdjustMethod> parse_adjust_method(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "bonferroni") return AdjustMethod::bonferroni;
    if (lower == "sidak") return AdjustMethod::sidak;
    if (lower == "holm") return AdjustMethod::holm;
    if (lower == "hochberg") return AdjustMethod::hochberg;
    if (lower == "hommel") return AdjustMethod::hommel;
    if (lower == "bh") return AdjustMethod::bh;
    if (lower == "by") return AdjustMethod::by;
    return std::nullopt;
}

std::string_view adjust_method_name(AdjustMethod method) {
    switch (method) {
        case AdjustMethod::bonferroni: return "bonferroni";
        case AdjustMethod::sidak: return "sidak";
        case AdjustMethod::holm: return "holm";
        case AdjustMethod::hochberg: return "hochberg";
        case AdjustMethod::hommel: return "hommel";
        case AdjustMethod::bh: return "bh";
        case AdjustMethod::by: return "by";
    }
    return "unknown";
}

}  // namespace ganova
