#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace ganova {

enum class AdjustMethod { bonferroni, sidak, holm, hochberg, hommel, bh, by };

enum class AlphaScheme { sidak, bonferroni };

// Per-test level for a family of G tests at family-wise level alpha_pf:
// sidak 1 - (1-alpha)^(1/G), bonferroni alpha/G.
double per_test_alpha(double alpha_pf, std::size_t G, AlphaScheme scheme);

// Adjusted p-values, same order as the input, each in [p_i, 1].
// Matches the classical procedures: Bonferroni, Sidak single-step,
// Holm step-down, Hochberg step-up, Hommel's stagewise algorithm,
// Benjamini-Hochberg and Benjamini-Yekutieli step-up.
std::vector<double> adjust_p(const std::vector<double>& p, AdjustMethod method);

std::optional<AdjustMethod> parse_adjust_method(std::string_view name);
std::string_view adjust_method_name(AdjustMethod method);

}  // namespace ganova
