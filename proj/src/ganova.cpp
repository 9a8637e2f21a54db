#include "ganova/ganova.hpp"

#include <algorithm>

#include "ganova/errors.hpp"

namespace ganova {

std::vector<double> raw_p_values(const KStatistics& ks) {
    std::vector<double> p;
    p.reserve(ks.k.size());
    for (std::size_t g = 0; g < ks.k.size(); g++)
        p.push_back(gb2_sf(ks.k[g], k_dist_params(ks.dims, g)));
    return p;
}

std::vector<double> decision_limits(const DesignDims& dims, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("decision_limits: alpha must lie in (0,1)");
    std::vector<double> dl;
    dl.reserve(dims.num_groups());
    for (std::size_t g = 0; g < dims.num_groups(); g++)
        dl.push_back(gb2_quantile(1.0 - alpha, k_dist_params(dims, g)));
    return dl;
}

std::vector<double> k_adjusted(const std::vector<double>& p_adj, const DesignDims& dims) {
    if (p_adj.size() != dims.num_groups())
        throw DomainError("k_adjusted: one adjusted p per group required");
    std::vector<double> k_adj;
    k_adj.reserve(p_adj.size());
    for (std::size_t g = 0; g < p_adj.size(); g++) {
        if (!(p_adj[g] >= 0.0 && p_adj[g] <= 1.0))
            throw DomainError("k_adjusted: p_adj must lie in [0,1]");
        const double u = 1.0 - std::max(p_adj[g], 1e-15);
        k_adj.push_back(gb2_quantile(u, k_dist_params(dims, g)));
    }
    return k_adj;
}

GanovaResult run_ganova(const GroupedData& data, double alpha, AdjustMethod method) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("run_ganova: alpha must lie in (0,1)");

    const SquaresDecomposition dec = decompose(data);
    const KStatistics ks = k_statistics(dec);

    GanovaResult r{{}, ks.k, {}, {}, {}, {}, 1.0 - alpha, alpha,
                   method, {},   false, anova_table(dec), dec.dims};
    r.labels.reserve(data.groups.size());
    for (const Group& g : data.groups) r.labels.push_back(g.label);
    r.p_raw = raw_p_values(ks);
    r.p_adj = adjust_p(r.p_raw, method);
    r.k_adj = k_adjusted(r.p_adj, dec.dims);
    r.dl_k = decision_limits(dec.dims, alpha);

    // Strict inequality: a group exactly on its limit is not flagged, in
    // either the p-scale or K-scale form.
    r.flags.reserve(r.p_adj.size());
    for (double pa : r.p_adj) r.flags.push_back(pa < alpha);
    r.reject = std::any_of(r.flags.begin(), r.flags.end(), [](bool f) { return f; });
    return r;
}

}  // namespace ganova
