#include "ganova/anova.hpp"

#include "ganova/errors.hpp"

namespace ganova {

SquaresDecomposition decompose(const GroupedData& data) {
    SquaresDecomposition dec{0.0, 0.0, 0.0, {}, design_dims(data)};
    const Summaries sums = group_summaries(data);

    // Two-pass sums (means first, then squared deviations): stable for data
    // sitting far from zero, unlike the sum-of-squares shortcut.
    dec.between.reserve(data.groups.size());
    for (std::size_t g = 0; g < data.groups.size(); g++) {
        const GroupSummary& s = sums.groups[g];
        const double dev = s.mean - sums.grand_mean;
        dec.between.push_back(static_cast<double>(s.n) * dev * dev);
        dec.sstr += dec.between.back();
        for (double v : data.groups[g].values) {
            dec.sse += (v - s.mean) * (v - s.mean);
            dec.sst += (v - sums.grand_mean) * (v - sums.grand_mean);
        }
    }
    return dec;
}

AnovaTable anova_table(const SquaresDecomposition& dec) {
    if (!(dec.sse > 0.0))
        throw DataError("all within-group variation is zero; F is undefined");
    AnovaTable t;
    t.df_treat = dec.dims.num_groups() - 1;
    t.df_err = dec.dims.total() - dec.dims.num_groups();
    t.sstr = dec.sstr;
    t.sse = dec.sse;
    t.mstr = dec.sstr / static_cast<double>(t.df_treat);
    t.mse = dec.sse / static_cast<double>(t.df_err);
    t.f = t.mstr / t.mse;
    t.p = f_sf(t.f, t.df_treat, t.df_err);
    return t;
}

KStatistics k_statistics(const SquaresDecomposition& dec) {
    if (!(dec.sse > 0.0))
        throw DataError("all within-group variation is zero; K is undefined");
    const double df_treat = static_cast<double>(dec.dims.num_groups() - 1);
    const double df_err = static_cast<double>(dec.dims.total() - dec.dims.num_groups());
    KStatistics ks{{}, dec.dims};
    ks.k.reserve(dec.between.size());
    for (double bg : dec.between) ks.k.push_back((bg / df_treat) / (dec.sse / df_err));
    return ks;
}

}  // namespace ganova
