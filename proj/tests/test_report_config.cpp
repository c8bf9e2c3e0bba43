#include <gtest/gtest.h>

#include <sstream>

#include "llike/config.hpp"
#include "llike/error.hpp"
#include "llike/report.hpp"

using namespace llike;

TEST(FormatDouble, RoundTripAndDecimalPoint) {
    EXPECT_EQ(format_double(0.0), "0.0");
    EXPECT_EQ(format_double(-0.25), "-0.25");
    EXPECT_EQ(format_double(3.0), "3.0");
    EXPECT_EQ(format_double(0.1), "0.1");
    const double v = 0.951420862;
    EXPECT_EQ(std::stod(format_double(v)), v);
}

TEST(Config, JsonRoundTrip) {
    RunConfig c;
    c.command = "grid";
    c.family = "augmented-primes";
    c.inject = {6, 35};
    c.variant = Variant::omega;
    c.xmax = 123456;
    c.grid = {10, 100, 1000};
    c.a = {1, 2};
    c.h = {1, 3};
    c.T = 36;
    c.K = 2.5;
    c.l = 3;
    c.y = 7;
    c.lo = 5;
    c.hi = 99;
    c.with_n_c = true;
    c.segment_len = 4096;
    c.out = "x.csv";
    c.format = "json";
    c.svg = "x.svg";
    c.seed = 7;
    c.nmax = 500;
    c.sets = 3;
    const nlohmann::json j = to_json(c);
    EXPECT_FALSE(j.contains("workers"));
    EXPECT_EQ(config_from_json(j), c);
    EXPECT_EQ(config_from_json(nlohmann::json::parse(j.dump())), c);

    // Workers never reach the serialized form.
    RunConfig w = c;
    w.workers = 8;
    EXPECT_EQ(to_json(w).dump(), j.dump());
}

TEST(Config, Defaults) {
    const RunConfig c = config_from_json(nlohmann::json::object());
    EXPECT_EQ(c, RunConfig{});
    EXPECT_THROW(config_from_json(nlohmann::json::array()), Error);
    EXPECT_THROW(config_from_json({{"x", "ten"}}), Error);
    EXPECT_THROW(config_from_json({{"variant", "both"}}), Error);
}

TEST(Config, Checks) {
    RunConfig c;
    EXPECT_NO_THROW(check_config(c));
    auto fails = [](RunConfig r) {
        try {
            check_config(r);
        } catch (const Error&) {
            return true;
        }
        return false;
    };
    RunConfig bad = c;
    bad.format = "xml";
    EXPECT_TRUE(fails(bad));
    bad = c;
    bad.segment_len = 10;
    EXPECT_TRUE(fails(bad));
    bad = c;
    bad.K = 0;
    EXPECT_TRUE(fails(bad));
    bad = c;
    bad.l = 5;
    EXPECT_TRUE(fails(bad));
    bad = c;
    bad.a = {1};
    EXPECT_TRUE(fails(bad));
    bad = c;
    bad.family = "all-primes";
    bad.set_file = "a.txt";
    EXPECT_TRUE(fails(bad));
}

TEST(Csv, Formats) {
    FamilyParams p;
    p.inject = {6};
    const CoprimeSet s = builtin_family("augmented-primes", p, 12);
    const Decomposition d = decompose(s);
    std::ostringstream dc;
    write_decomposition_csv(dc, d);
    EXPECT_EQ(dc.str(), "generator,part,spf\n5,P,\n6,C,2\n7,P,\n11,P,\n");

    const SemigroupEnumeration e = enumerate(std::vector<std::uint64_t>{6, 35}, 250);
    std::ostringstream sc;
    write_semigroup_csv(sc, e);
    EXPECT_EQ(sc.str(),
              "element,exponents\n1,\n6,6^1\n35,35^1\n36,6^2\n210,6^1/35^1\n216,6^3\n");

    ConvergenceReport r;
    r.grid = {8, 16};
    r.counts = {-2, 0};
    r.values = {-0.25, 0.0};
    std::ostringstream cc;
    write_convergence_csv(cc, r);
    EXPECT_EQ(cc.str(), "x,count,value\n8,-2,-0.25\n16,0,0.0\n");
}

TEST(Json, ReportsCarryExactValues) {
    const CoprimeSet primes = builtin_family("all-primes", {}, 100);
    const Decomposition d = decompose(primes);
    const nlohmann::json j = to_json(d);
    EXPECT_EQ(j["composites"].size(), 0u);
    EXPECT_EQ(j["prime_count"], 25);
    EXPECT_EQ(set_json(primes)["variant"], "big-omega");
    const BoundReport b = hall_tenenbaum_bound(primes, d, 10);
    EXPECT_EQ(to_json(b)["recip_sum"]["exact"], "247/210");
}

TEST(Svg, WellFormedChart) {
    const std::string svg = svg_chart({10, 100, 1000, 10000}, {0.0, -0.02, 0.014, -0.0136}, "M(x) <all>");
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    EXPECT_NE(svg.find("<polyline"), std::string::npos);
    EXPECT_NE(svg.find("&lt;all&gt;"), std::string::npos);
    EXPECT_EQ(svg, svg_chart({10, 100, 1000, 10000}, {0.0, -0.02, 0.014, -0.0136}, "M(x) <all>"));
    EXPECT_NO_THROW(svg_chart({10}, {0.5}, "one"));
}
