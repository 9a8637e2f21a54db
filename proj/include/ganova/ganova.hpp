#pragma once

#include <string>
#include <vector>

#include "ganova/adjust.hpp"
#include "ganova/anova.hpp"
#include "ganova/dataset.hpp"
#include "ganova/distributions.hpp"

namespace ganova {

// Full outcome of the simultaneous test. The three rejection forms agree for
// every group: p_adj < alpha, 1 - p_adj > dl_p, and k_adj > dl_k.
struct GanovaResult {
    std::vector<std::string> labels;
    std::vector<double> k;
    std::vector<double> p_raw;
    std::vector<double> p_adj;
    std::vector<double> k_adj;   // quantile of the K law at 1 - p_adj
    std::vector<double> dl_k;    // per-group decision limit, quantile at 1 - alpha
    double dl_p = 0.0;           // decision limit on the probability scale, 1 - alpha
    double alpha = 0.05;
    AdjustMethod method = AdjustMethod::bh;
    std::vector<bool> flags;
    bool reject = false;
    AnovaTable anova;
    DesignDims dims;
};

// p_raw[g] = upper tail of the exact K law at K_g.
std::vector<double> raw_p_values(const KStatistics& ks);

// dl_k[g] = gb2_quantile(1 - alpha; k_dist_params(dims, g)). Limits differ
// across groups when sizes differ.
std::vector<double> decision_limits(const DesignDims& dims, double alpha);

// k_adj[g] = gb2_quantile(1 - p_adj[g]); p_adj of 0 is mapped to the
// quantile at 1 - 1e-15 so the report stays finite.
std::vector<double> k_adjusted(const std::vector<double>& p_adj, const DesignDims& dims);

GanovaResult run_ganova(const GroupedData& data, double alpha = 0.05,
                        AdjustMethod method = AdjustMethod::bh);

}  // namespace ganova
