#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "ganova/dataset.hpp"
#include "ganova/errors.hpp"
#include "oracles.hpp"

using namespace ganova;

TEST_CASE("parse_long_csv keeps groups in first-appearance order") {
    const GroupedData data =
        parse_long_csv("group,value\nzeta,1\nalpha,2\nzeta,3\nmid,4\nalpha,5\n");
    REQUIRE(data.groups.size() == 3);
    CHECK(data.groups[0].label == "zeta");
    CHECK(data.groups[1].label == "alpha");
    CHECK(data.groups[2].label == "mid");
    CHECK(data.groups[0].values == std::vector<double>{1.0, 3.0});
    CHECK(data.groups[1].values == std::vector<double>{2.0, 5.0});
    CHECK(data.groups[2].values == std::vector<double>{4.0});
}

TEST_CASE("parse_long_csv handles CRLF, blank lines, spaces and no trailing newline") {
    const GroupedData data =
        parse_long_csv("group,value\r\n A , 1.5 \r\n\r\nB,2\n\nA,-3e-1");
    REQUIRE(data.groups.size() == 2);
    CHECK(data.groups[0].values == std::vector<double>{1.5, -0.3});
    CHECK(data.groups[1].values == std::vector<double>{2.0});
}

TEST_CASE("parse_long_csv drops missing values") {
    const GroupedData data =
        parse_long_csv("group,value\nA,1\nA,NA\nB,na\nB,2\nA,NaN\nB,\nA,4\n");
    CHECK(data.groups[0].values == std::vector<double>{1.0, 4.0});
    CHECK(data.groups[1].values == std::vector<double>{2.0});
}

TEST_CASE("parse_long_csv honours custom column names and ignores extras") {
    const std::string text =
        "id,conc,site,note\n1,0.5,north,x\n2,0.75,south,\n3,1.25,north,y\n";
    const GroupedData data = parse_long_csv(text, "site", "conc");
    REQUIRE(data.groups.size() == 2);
    CHECK(data.groups[0].label == "north");
    CHECK(data.groups[0].values == std::vector<double>{0.5, 1.25});
    CHECK(data.groups[1].values == std::vector<double>{0.75});
}

TEST_CASE("parse_long_csv error reporting cites the file line") {
    CHECK_THROWS_AS(parse_long_csv(""), DataError);
    CHECK_THROWS_AS(parse_long_csv("\n"), DataError);
    CHECK_THROWS_WITH_AS(parse_long_csv("g,value\nA,1\nB,2\n"),
                         "header has no 'group' column", DataError);
    CHECK_THROWS_WITH_AS(parse_long_csv("group,v\nA,1\nB,2\n"),
                         "header has no 'value' column", DataError);
    // Header is line 1, so the bad rows below are lines 3 and 4.
    CHECK_THROWS_WITH_AS(parse_long_csv("group,value\nA,1\nB,oops\n"),
                         "row 3: unparseable value 'oops'", DataError);
    CHECK_THROWS_WITH_AS(parse_long_csv("group,value\nA,1\nB,2\njustonefield\n"),
                         "row 4: too few columns", DataError);
    // Partial numeric tokens must not silently truncate.
    CHECK_THROWS_AS(parse_long_csv("group,value\nA,1.5x\nB,2\n"), DataError);
    CHECK_THROWS_AS(parse_long_csv("group,value\nA,1\nA,2\n"), DataError);  // one group
    CHECK_THROWS_AS(parse_long_csv("group,value\nA,NA\nB,NA\n"), DataError);
}

TEST_CASE("group_summaries against direct arithmetic") {
    const GroupedData data{{{"A", {1.0, 2.0, 3.0}}, {"B", {4.0, 6.0}}, {"C", {7.0}}}};
    const Summaries s = group_summaries(data);
    REQUIRE(s.groups.size() == 3);
    CHECK(s.n_t == 6);
    CHECK(s.grand_mean == doctest::Approx(23.0 / 6.0).epsilon(1e-15));
    CHECK(s.groups[0].mean == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(s.groups[0].variance.value() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.groups[1].mean == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(s.groups[1].variance.value() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(s.groups[2].n == 1);
    CHECK_FALSE(s.groups[2].variance.has_value());
}

TEST_CASE("group_summaries reproduces the four-group demo statistics") {
    const Summaries s = group_summaries(oracles::demo_data());
    CHECK(s.n_t == 60);
    CHECK(s.grand_mean == doctest::Approx(103.06633333333335).epsilon(1e-14));
    CHECK(s.groups[0].mean == doctest::Approx(104.95333333333335).epsilon(1e-14));
    const double expected_var[4] = {146.73816666666667, 74.30675428571428, 128.23255523809524,
                                    48.89693809523808};
    for (int g = 0; g < 4; g++)
        CHECK(s.groups[g].variance.value() == doctest::Approx(expected_var[g]).epsilon(1e-12));
}

TEST_CASE("transform applies sqrt and log element-wise") {
    const GroupedData data{{{"A", {1.0, 4.0, 9.0}}, {"B", {0.25, 16.0}}}};
    const GroupedData rooted = transform(data, Transform::sqrt);
    CHECK(rooted.groups[0].values == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(rooted.groups[1].values == std::vector<double>{0.5, 4.0});
    const GroupedData logged = transform(data, Transform::log);
    CHECK(logged.groups[0].values[1] == doctest::Approx(std::log(4.0)).epsilon(1e-15));
    const GroupedData same = transform(data, Transform::none);
    CHECK(same.groups[0].values == data.groups[0].values);
}

TEST_CASE("transform rejects out-of-domain values, naming the offender") {
    const GroupedData neg{{{"A", {1.0, -2.0}}, {"B", {3.0}}}};
    CHECK_THROWS_WITH_AS(transform(neg, Transform::sqrt),
                         "sqrt transform: negative value in group 'A' at position 2", DataError);
    const GroupedData zero{{{"A", {1.0}}, {"B", {0.0, 3.0}}}};
    CHECK_THROWS_WITH_AS(transform(zero, Transform::log),
                         "log transform: non-positive value in group 'B' at position 1",
                         DataError);
    CHECK_NOTHROW(transform(zero, Transform::sqrt));  // sqrt(0) is fine
}

TEST_CASE("design_dims mirrors the group sizes") {
    const DesignDims dims = design_dims(oracles::demo_data());
    CHECK(dims.group_sizes == std::vector<std::size_t>{15, 15, 15, 15});
    const GroupedData tiny{{{"A", {1.0}}, {"B", {2.0}}}};
    CHECK_THROWS_AS(design_dims(tiny), DesignError);
}

TEST_CASE("sort_groups orders labels lexicographically without touching values") {
    const GroupedData data{{{"delta", {4.0}}, {"alpha", {1.0}}, {"charlie", {3.0, 3.5}}}};
    const GroupedData sorted = sort_groups(data);
    CHECK(sorted.groups[0].label == "alpha");
    CHECK(sorted.groups[1].label == "charlie");
    CHECK(sorted.groups[2].label == "delta");
    CHECK(sorted.groups[1].values == std::vector<double>{3.0, 3.5});
    CHECK(data.groups[0].label == "delta");  // input untouched
}

TEST_CASE("demo CSV text round-trips through the parser") {
    const GroupedData parsed = parse_long_csv(oracles::demo_csv());
    const GroupedData direct = oracles::demo_data();
    REQUIRE(parsed.groups.size() == 4);
    for (int g = 0; g < 4; g++) {
        CHECK(parsed.groups[g].label == direct.groups[g].label);
        CHECK(parsed.groups[g].values == direct.groups[g].values);
    }
}
