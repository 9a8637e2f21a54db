#include "ganova/homogeneity.hpp"

#include <algorithm>
#include <cmath>

#include "ganova/distributions.hpp"
#include "ganova/errors.hpp"

namespace ganova {

BartlettResult bartlett(const GroupedData& data) {
    const DesignDims dims = design_dims(data);
    const Summaries sums = group_summaries(data);
    const double G = static_cast<double>(dims.num_groups());
    const double df_err = static_cast<double>(dims.total() - dims.num_groups());

    double pooled = 0.0;
    double log_sum = 0.0;
    double inv_sum = 0.0;
    for (const GroupSummary& s : sums.groups) {
        if (s.n < 2)
            throw DesignError("bartlett: group '" + s.label + "' needs at least 2 observations");
        if (!(*s.variance > 0.0))
            throw DataError("bartlett: group '" + s.label + "' has zero variance");
        const double w = static_cast<double>(s.n - 1);
        pooled += w * *s.variance;
        log_sum += w * std::log(*s.variance);
        inv_sum += 1.0 / w;
    }
    pooled /= df_err;

    const double c = 1.0 + (inv_sum - 1.0 / df_err) / (3.0 * (G - 1.0));
    BartlettResult r;
    r.statistic = std::max(0.0, (df_err * std::log(pooled) - log_sum) / c);
    r.df = dims.num_groups() - 1;
    r.p = chi2_sf(r.statistic, r.df);
    return r;
}

}  // namespace ganova
