#pragma once

#include <cstddef>
#include <vector>

namespace ganova {

// Parameters of the generalized beta distribution of the second kind,
// density a x^{ap-1} / (b^{ap} B(p,q) (1 + (x/b)^a)^{p+q}) on x > 0.
struct Gb2Params {
    double a;  // outer shape (1 for the K-statistic law)
    double b;  // scale
    double p;  // first inner shape
    double q;  // second inner shape
};

// Group structure of a one-way design: G groups with sizes n_g, n_T = sum n_g.
struct DesignDims {
    std::vector<std::size_t> group_sizes;

    explicit DesignDims(std::vector<std::size_t> sizes);
    std::size_t num_groups() const { return group_sizes.size(); }
    std::size_t total() const;
};

// Null law of the g-th K statistic (0-based g):
// GB2 with a = 1, b = (n_T-G)(n_T-n_g)/(n_T(G-1)), p = 1/2, q = (n_T-G)/2.
Gb2Params k_dist_params(const DesignDims& dims, std::size_t g);

double gb2_pdf(double k, const Gb2Params& params);
double gb2_cdf(double k, const Gb2Params& params);
// Upper tail 1 - cdf, computed without cancellation.
double gb2_sf(double k, const Gb2Params& params);
// Quantile at u in [0, 1): b (w/(1-w))^{1/a} with w = inv_reg_inc_beta(u, p, q).
double gb2_quantile(double u, const Gb2Params& params);

// j-th non-central moment of K for the balanced design (G groups of n):
// (n-1)^j Gamma(1/2 + j) Gamma(M - j) / (Gamma(1/2) Gamma(M)), M = G(n-1)/2.
// Requires M > j for the moment to exist.
double k_moment(std::size_t j, std::size_t n, std::size_t G);

double f_cdf(double x, std::size_t d1, std::size_t d2);
double f_sf(double x, std::size_t d1, std::size_t d2);

double chi2_cdf(double x, std::size_t df);
double chi2_sf(double x, std::size_t df);

}  // namespace ganova
