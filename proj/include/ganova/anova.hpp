#pragma once

#include <cstddef>
#include <vector>

#include "ganova/dataset.hpp"
#include "ganova/distributions.hpp"

namespace ganova {

// Sums-of-squares partition SST = SSTR + SSE with the per-group
// between squares n_g (mean_g - grand_mean)^2.
struct SquaresDecomposition {
    double sst = 0.0;
    double sstr = 0.0;
    double sse = 0.0;
    std::vector<double> between;
    DesignDims dims;
};

struct AnovaTable {
    std::size_t df_treat = 0;  // G - 1
    std::size_t df_err = 0;    // n_T - G
    double sstr = 0.0;
    double sse = 0.0;
    double mstr = 0.0;
    double mse = 0.0;
    double f = 0.0;
    double p = 1.0;
};

// Per-group K_g = [between_g / (G-1)] / [SSE / (n_T-G)]; the K_g sum to F.
struct KStatistics {
    std::vector<double> k;
    DesignDims dims;
};

SquaresDecomposition decompose(const GroupedData& data);
AnovaTable anova_table(const SquaresDecomposition& dec);
KStatistics k_statistics(const SquaresDecomposition& dec);

}  // namespace ganova
