#pragma once

#include <cstddef>

#include "ganova/dataset.hpp"

namespace ganova {

struct BartlettResult {
    double statistic = 0.0;  // chi-square scale
    std::size_t df = 0;      // G - 1
    double p = 1.0;
};

// Bartlett's test of equal group variances:
// statistic = [(n_T-G) ln S_p^2 - sum (n_g-1) ln S_g^2] / C,
// C = 1 + (sum 1/(n_g-1) - 1/(n_T-G)) / (3(G-1)), p from chi-square(G-1).
BartlettResult bartlett(const GroupedData& data);

}  // namespace ganova
