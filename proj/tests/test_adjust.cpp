#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "ganova/adjust.hpp"
#include "ganova/errors.hpp"
#include "oracles.hpp"

using namespace ganova;

namespace {

std::vector<double> random_pvals(std::mt19937_64& rng, std::size_t m, bool gridded) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> p(m);
    for (double& v : p) {
        v = unif(rng);
        if (gridded) v = std::round(v * 20.0) / 20.0;  // coarse grid forces ties
    }
    return p;
}

void check_close(const std::vector<double>& got, const std::vector<double>& want,
                 double tol = 1e-12) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); i++)
        CHECK(got[i] == doctest::Approx(want[i]).epsilon(tol));
}

}  // namespace

TEST_CASE("single-step methods on hand examples") {
    check_close(adjust_p({0.01, 0.04}, AdjustMethod::bonferroni), {0.02, 0.08});
    check_close(adjust_p({0.3, 0.7}, AdjustMethod::bonferroni), {0.6, 1.0});  // clamped
    // Sidak at m = 4: 1 - (1-p)^4
    check_close(adjust_p({0.05, 0.05, 0.05, 0.05}, AdjustMethod::sidak),
                {0.18549375, 0.18549375, 0.18549375, 0.18549375});
}

TEST_CASE("step-down and step-up methods on hand examples") {
    check_close(adjust_p({0.01, 0.04}, AdjustMethod::holm), {0.02, 0.04});
    // (0.02, 0.03) separates Holm from Hochberg.
    check_close(adjust_p({0.02, 0.03}, AdjustMethod::holm), {0.04, 0.04});
    check_close(adjust_p({0.02, 0.03}, AdjustMethod::hochberg), {0.03, 0.03});
    // BH on an arithmetic sequence collapses to the top scaled value.
    check_close(adjust_p({0.01, 0.02, 0.03, 0.04}, AdjustMethod::bh),
                {0.04, 0.04, 0.04, 0.04});
    // BY = BH inflated by H(4) = 25/12.
    check_close(adjust_p({0.01, 0.02, 0.03, 0.04}, AdjustMethod::by),
                {0.04 * 25.0 / 12.0, 0.04 * 25.0 / 12.0, 0.04 * 25.0 / 12.0,
                 0.04 * 25.0 / 12.0});
    // Order is restored to the input positions.
    check_close(adjust_p({0.04, 0.01}, AdjustMethod::holm), {0.04, 0.02});
}

TEST_CASE("hommel on a hand-checked closed-testing example") {
    // p = (0.01, 0.04, 0.1): subset Simes p-values give (0.03, 0.08, 0.1).
    check_close(adjust_p({0.01, 0.04, 0.1}, AdjustMethod::hommel), {0.03, 0.08, 0.1});
    // At m = 2 Hommel coincides with Hochberg.
    check_close(adjust_p({0.02, 0.03}, AdjustMethod::hommel), {0.03, 0.03});
}

TEST_CASE("hommel equals brute-force closed testing with Simes local tests") {
    std::mt19937_64 rng(20240816);
    for (int trial = 0; trial < 200; trial++) {
        const std::size_t m = 2 + static_cast<std::size_t>(rng() % 7);  // 2..8
        const std::vector<double> p = random_pvals(rng, m, trial % 3 == 0);
        const std::vector<double> got = adjust_p(p, AdjustMethod::hommel);
        const std::vector<double> want = oracles::closed_testing_simes(p);
        for (std::size_t i = 0; i < m; i++)
            CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
    }
    // Edge shapes: all equal, strictly decreasing input order.
    check_close(adjust_p({0.2, 0.2, 0.2, 0.2}, AdjustMethod::hommel),
                oracles::closed_testing_simes({0.2, 0.2, 0.2, 0.2}));
    check_close(adjust_p({0.5, 0.4, 0.3, 0.2, 0.1}, AdjustMethod::hommel),
                oracles::closed_testing_simes({0.5, 0.4, 0.3, 0.2, 0.1}));
}

TEST_CASE("bonferroni and bh match independent reference implementations") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; trial++) {
        const std::vector<double> p = random_pvals(rng, 2 + rng() % 10, trial % 2 == 0);
        check_close(adjust_p(p, AdjustMethod::bonferroni), oracles::ref_bonferroni(p));
        check_close(adjust_p(p, AdjustMethod::bh), oracles::ref_bh(p));
    }
}

TEST_CASE("power ordering across methods holds pointwise") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; trial++) {
        const std::vector<double> p = random_pvals(rng, 2 + rng() % 9, trial % 4 == 0);
        const auto bonf = adjust_p(p, AdjustMethod::bonferroni);
        const auto sidak = adjust_p(p, AdjustMethod::sidak);
        const auto holm = adjust_p(p, AdjustMethod::holm);
        const auto hoch = adjust_p(p, AdjustMethod::hochberg);
        const auto homm = adjust_p(p, AdjustMethod::hommel);
        const auto bh = adjust_p(p, AdjustMethod::bh);
        const auto by = adjust_p(p, AdjustMethod::by);
        for (std::size_t i = 0; i < p.size(); i++) {
            CHECK(sidak[i] <= bonf[i] + 1e-12);
            CHECK(holm[i] <= bonf[i] + 1e-12);
            CHECK(hoch[i] <= holm[i] + 1e-12);
            CHECK(homm[i] <= hoch[i] + 1e-12);
            CHECK(bh[i] <= homm[i] + 1e-12);
            CHECK(bh[i] <= by[i] + 1e-12);
            // Every method stays within [p_i, 1].
            for (const auto* adj : {&bonf, &sidak, &holm, &hoch, &homm, &bh, &by}) {
                CHECK((*adj)[i] >= p[i] - 1e-15);
                CHECK((*adj)[i] <= 1.0);
            }
        }
    }
}

TEST_CASE("adjustment preserves the ordering of the raw p-values") {
    std::mt19937_64 rng(123);
    const std::vector<AdjustMethod> all{
        AdjustMethod::bonferroni, AdjustMethod::sidak,    AdjustMethod::holm,
        AdjustMethod::hochberg,   AdjustMethod::hommel,   AdjustMethod::bh,
        AdjustMethod::by};
    for (int trial = 0; trial < 50; trial++) {
        const std::vector<double> p = random_pvals(rng, 3 + rng() % 6, trial % 2 == 0);
        for (AdjustMethod method : all) {
            const std::vector<double> adj = adjust_p(p, method);
            for (std::size_t i = 0; i < p.size(); i++)
                for (std::size_t j = 0; j < p.size(); j++)
                    if (p[i] < p[j]) CHECK(adj[i] <= adj[j] + 1e-15);
        }
    }
}

TEST_CASE("edge cases: single test, degenerate p-values, validation") {
    const std::vector<AdjustMethod> all{
        AdjustMethod::bonferroni, AdjustMethod::sidak,    AdjustMethod::holm,
        AdjustMethod::hochberg,   AdjustMethod::hommel,   AdjustMethod::bh,
        AdjustMethod::by};
    for (AdjustMethod method : all) {
        check_close(adjust_p({0.0371}, method), {0.0371}, 1e-15);
        check_close(adjust_p({0.0, 0.0, 0.0}, method), {0.0, 0.0, 0.0}, 1e-15);
        const std::vector<double> ones = adjust_p({1.0, 1.0}, method);
        CHECK(ones[0] == 1.0);
        CHECK(ones[1] == 1.0);
    }
    CHECK_THROWS_AS(adjust_p({}, AdjustMethod::bh), DomainError);
    CHECK_THROWS_AS(adjust_p({0.5, -0.01}, AdjustMethod::bh), DomainError);
    CHECK_THROWS_AS(adjust_p({0.5, 1.01}, AdjustMethod::holm), DomainError);
}

TEST_CASE("per_test_alpha reference values") {
    CHECK(per_test_alpha(0.05, 4, AlphaScheme::sidak) ==
          doctest::Approx(oracles::ref_sidak_005_4).epsilon(1e-14));
    CHECK(per_test_alpha(0.05, 4, AlphaScheme::bonferroni) == 0.0125);
    CHECK(per_test_alpha(0.05, 1, AlphaScheme::sidak) == doctest::Approx(0.05).epsilon(1e-14));
    // Sidak is the less conservative of the two for G >= 2.
    for (std::size_t G : {2, 4, 10, 100})
        CHECK(per_test_alpha(0.05, G, AlphaScheme::sidak) >
              per_test_alpha(0.05, G, AlphaScheme::bonferroni));
    CHECK_THROWS_AS(per_test_alpha(0.0, 4, AlphaScheme::sidak), DomainError);
    CHECK_THROWS_AS(per_test_alpha(1.0, 4, AlphaScheme::bonferroni), DomainError);
    CHECK_THROWS_AS(per_test_alpha(0.05, 0, AlphaScheme::sidak), DomainError);
}

TEST_CASE("method names parse case-insensitively and round-trip") {
    const std::vector<AdjustMethod> all{
        AdjustMethod::bonferroni, AdjustMethod::sidak,    AdjustMethod::holm,
        AdjustMethod::hochberg,   AdjustMethod::hommel,   AdjustMethod::bh,
        AdjustMethod::by};
    for (AdjustMethod method : all) {
        const std::string_view name = adjust_method_name(method);
        REQUIRE(parse_adjust_method(name).has_value());
        CHECK(parse_adjust_method(name).value() == method);
    }
    CHECK(parse_adjust_method("BH").value() == AdjustMethod::bh);
    CHECK(parse_adjust_method("Hommel").value() == AdjustMethod::hommel);
    CHECK_FALSE(parse_adjust_method("fisher").has_value());
    CHECK_FALSE(parse_adjust_method("").has_value());
}
