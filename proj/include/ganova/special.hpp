#pragma once

#include <cstddef>

namespace ganova {

// Convergence knobs shared by the iterative routines below.
struct Accuracy {
    double rel_tol = 1e-14;
    double abs_tol = 1e-300;
    std::size_t max_iter = 200;
};

// ln Gamma(x) for x > 0.
double ln_gamma(double x);

// ln B(p, q) = ln Gamma(p) + ln Gamma(q) - ln Gamma(p + q).
double ln_beta(double p, double q);

// Regularized incomplete beta I_x(p, q), x in [0, 1], p, q > 0.
double reg_inc_beta(double x, double p, double q, const Accuracy& acc = {});

// Inverse of reg_inc_beta in x: returns x with I_x(p, q) = u.
double inv_reg_inc_beta(double u, double p, double q, const Accuracy& acc = {});

// Regularized lower incomplete gamma P(s, x) = gamma(s, x) / Gamma(s).
double reg_lower_inc_gamma(double s, double x, const Accuracy& acc = {});

// Upper tail Q(s, x) = 1 - P(s, x), computed without cancellation.
double reg_upper_inc_gamma(double s, double x, const Accuracy& acc = {});

}  // namespace ganova
