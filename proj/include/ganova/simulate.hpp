#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace ganova {

// Rejection rules tabulated by the Type I error study: the simultaneous test
// under three adjustment methods, plus the classical F test.
enum class SimMethod { bonferroni, hommel, bh, anova };

struct SimConfig {
    std::size_t groups = 3;
    std::size_t group_size = 10;  // equal-n design
    double alpha = 0.05;
    std::vector<SimMethod> methods = {SimMethod::bonferroni, SimMethod::hommel,
                                      SimMethod::bh, SimMethod::anova};
    std::size_t reps = 10000;
    std::uint64_t seed = 1;
};

struct MethodEstimate {
    SimMethod method;
    double rate = 0.0;  // fraction of replications rejecting H0
    double se = 0.0;    // sqrt(rate (1-rate) / reps)
};

struct SimResult {
    std::vector<MethodEstimate> estimates;  // same order as cfg.methods
    std::size_t reps = 0;
    std::uint64_t seed = 0;
};

// Deterministic standard-normal stream keyed by (seed, stream_id). Distinct
// stream ids give independent sequences, so per-replication streams make the
// simulation reproducible regardless of execution order.
class NormalStream {
  public:
    NormalStream(std::uint64_t seed, std::uint64_t stream_id);
    double next();

  private:
    std::uint64_t next_u64();
    std::uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

// Empirical family-wise Type I error under H0 (all means 0, unit variance):
// each replication draws G groups of n normals and applies every requested
// rejection rule to the same draw.
SimResult simulate_type1(const SimConfig& cfg);

std::optional<SimMethod> parse_sim_method(std::string_view name);
std::string_view sim_method_name(SimMethod method);

}  // namespace ganova
