#include "ganova/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ganova/adjust.hpp"
#include "ganova/distributions.hpp"
#include "ganova/errors.hpp"

namespace ganova {

namespace {

// splitmix64 finalizer: full avalanche, so nearby states give unrelated outputs.
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

NormalStream::NormalStream(std::uint64_t seed, std::uint64_t stream_id)
    : state_(mix64(seed + 0x9E3779B97F4A7C15ULL * (stream_id + 1))) {}

std::uint64_t NormalStream::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
}

double NormalStream::next() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    // Box-Muller on uniforms from the top 53 bits; u1 shifted into (0,1]
    // so the log never sees zero.
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
}

SimResult simulate_type1(const SimConfig& cfg) {
    if (cfg.groups < 2 || cfg.group_size < 2)
        throw DomainError("simulate_type1: need G >= 2 and n >= 2");
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0))
        throw DomainError("simulate_type1: alpha must lie in (0,1)");
    if (cfg.reps < 1) throw DomainError("simulate_type1: reps must be >= 1");
    if (cfg.methods.empty()) throw DomainError("simulate_type1: no methods requested");

    const std::size_t G = cfg.groups;
    const std::size_t n = cfg.group_size;
    const DesignDims dims(std::vector<std::size_t>(G, n));
    std::vector<Gb2Params> params;
    params.reserve(G);
    for (std::size_t g = 0; g < G; g++) params.push_back(k_dist_params(dims, g));
    const std::size_t df_treat = G - 1;
    const std::size_t df_err = G * n - G;

    std::vector<std::size_t> hits(cfg.methods.size(), 0);
    std::vector<double> means(G), p_raw(G);
    std::vector<std::vector<double>> y(G, std::vector<double>(n));

    for (std::size_t rep = 0; rep < cfg.reps; rep++) {
        NormalStream stream(cfg.seed, rep);
        double grand = 0.0;
        double sse = 0.0;
        for (std::size_t g = 0; g < G; g++) {
            double sum = 0.0;
            for (std::size_t i = 0; i < n; i++) {
                y[g][i] = stream.next();
                sum += y[g][i];
            }
            means[g] = sum / static_cast<double>(n);
            grand += sum;
        }
        grand /= static_cast<double>(G * n);
        double f = 0.0;
        for (std::size_t g = 0; g < G; g++)
            for (double v : y[g]) sse += (v - means[g]) * (v - means[g]);
        const double mse = sse / static_cast<double>(df_err);
        for (std::size_t g = 0; g < G; g++) {
            const double between = static_cast<double>(n) * (means[g] - grand) * (means[g] - grand);
            const double k = between / static_cast<double>(df_treat) / mse;
            f += k;
            p_raw[g] = gb2_sf(k, params[g]);
        }
        const double p_f = f_sf(f, df_treat, df_err);

        for (std::size_t m = 0; m < cfg.methods.size(); m++) {
            bool rejected = false;
            if (cfg.methods[m] == SimMethod::anova) {
                rejected = p_f < cfg.alpha;
            } else {
                const AdjustMethod adj = cfg.methods[m] == SimMethod::bonferroni
                                             ? AdjustMethod::bonferroni
                                             : cfg.methods[m] == SimMethod::hommel
                                                   ? AdjustMethod::hommel
                                                   : AdjustMethod::bh;
                const std::vector<double> p_adj = adjust_p(p_raw, adj);
                rejected = std::any_of(p_adj.begin(), p_adj.end(),
                                       [&](double p) { return p < cfg.alpha; });
            }
            if (rejected) hits[m]++;
        }
    }

    SimResult result;
    result.reps = cfg.reps;
    result.seed = cfg.seed;
    for (std::size_t m = 0; m < cfg.methods.size(); m++) {
        const double rate = static_cast<double>(hits[m]) / static_cast<double>(cfg.reps);
        const double se = std::sqrt(rate * (1.0 - rate) / static_cast<double>(cfg.reps));
        result.estimates.push_back(MethodEstimate{cfg.methods[m], rate, se});
    }
    return result;
}

std::optional<SimMethod> parse_sim_method(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "bonferroni") return SimMethod::bonferroni;
    if (lower == "hommel") return SimMethod::hommel;
    if (lower == "bh") return SimMethod::bh;
    if (lower == "anova") return SimMethod::anova;
    return std::nullopt;
}

std::string_view sim_method_name(SimMethod method) {
    switch (method) {
        case SimMethod::bonferroni: return "bonferroni";
        case SimMethod::hommel: return "hommel";
        case SimMethod::bh: return "bh";
        case SimMethod::anova: return "anova";
    }
    return "unknown";
}

}  // namespace ganova
