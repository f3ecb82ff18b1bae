#include "cross/spec_text.hpp"

#include "cross/errors.hpp"
#include "cross/metric.hpp"

#include <doctest.h>

using namespace cross;

TEST_SUITE_BEGIN("spec_text");

TEST_CASE("parse the documented forms") {
    MetricSpec s = parse_metric("S7:h(0.5,1,1)");
    CHECK(s.family == Family::QuatH);
    CHECK(s.n == 1);
    CHECK(s.quotient == Quotient::Sphere);
    CHECK(s.t1 == 0.5);
    CHECK(s.t3 == 1.0);

    s = parse_metric("RP7:h(1,1,1)");
    CHECK(s.quotient == Quotient::Projective);

    s = parse_metric("CP3:hcheck(0.7)");
    CHECK(s.family == Family::CPCheckH);
    CHECK(s.n == 1);
    CHECK(s.t1 == 0.7);

    s = parse_metric("S9:g(2)");
    CHECK(s.family == Family::BergerG);
    CHECK(s.n == 4);

    s = parse_metric("S15:k(0.5)");
    CHECK(s.family == Family::Spin9K);

    s = parse_metric("Sd(11):round");
    CHECK(s.family == Family::Round);
    CHECK(s.n == 11);

    s = parse_metric("RPd(4):round");
    CHECK(s.quotient == Quotient::Projective);

    s = parse_metric("CPn(4):fs");
    CHECK(s.family == Family::FSCP);
    s = parse_metric("HPn(2):fs");
    CHECK(s.family == Family::FSHP);
    s = parse_metric("CaP2:fs");
    CHECK(s.family == Family::FSCayley);

    s = parse_metric("S7:h(1,2,3)*scale=2.0");
    CHECK(s.scale == 2.0);
    CHECK(s.t1 == 1.0);
}

TEST_CASE("parameters are canonicalized on parse") {
    const MetricSpec s = parse_metric("S7:h(3,1,2)");
    CHECK(s.t1 == 1.0);
    CHECK(s.t2 == 2.0);
    CHECK(s.t3 == 3.0);
}

TEST_CASE("round trip through format_metric") {
    const char* texts[] = {
        "S7:h(0.5,1,1)",  "RP11:h(0.25,1.5,7)", "S3:h(1,2,3)",      "CP5:hcheck(0.123456789)",
        "S5:g(0.3)",      "RP9:g(4)",           "S15:k(0.7)",       "RP15:k(1.25)",
        "Sd(11):round",   "RPd(2):round",       "CPn(7):fs",        "HPn(3):fs",
        "CaP2:fs",        "S7:h(1,1,1)*scale=0.125",
    };
    for (const char* t : texts) {
        const MetricSpec spec = parse_metric(t);
        CHECK(parse_metric(format_metric(spec)) == spec);
    }
    // awkward doubles still survive
    MetricSpec s = MetricSpec::quat(2, 1.0 / 3.0, 0.1, 123.456, Quotient::Sphere, 1.0 / 7.0);
    CHECK(parse_metric(format_metric(s)) == s);
}

TEST_CASE("errors carry position and reason") {
    CHECK_THROWS_AS(parse_metric("X7:h(1,1,1)"), parse_error);
    CHECK_THROWS_AS(parse_metric("S8:h(1,1,1)"), parse_error);  // d != 3 mod 4
    CHECK_THROWS_AS(parse_metric("S8:g(1)"), parse_error);      // even d
    CHECK_THROWS_AS(parse_metric("S14:k(1)"), parse_error);     // k only on S^15
    CHECK_THROWS_AS(parse_metric("CP4:hcheck(1)"), parse_error);
    CHECK_THROWS_AS(parse_metric("S7:h(1,1)"), parse_error);
    CHECK_THROWS_AS(parse_metric("S7:h(1,0,1)"), parse_error);  // nonpositive
    CHECK_THROWS_AS(parse_metric("S7:h(1,1,1)x"), parse_error); // trailing
    CHECK_THROWS_AS(parse_metric("S7:h(1,1,1)*scale=-1"), parse_error);
    CHECK_THROWS_AS(parse_metric("Sd(1):round"), parse_error);

    try {
        parse_metric("S7:q(1,1,1)");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 3);
        CHECK(!e.reason().empty());
    }
}

TEST_SUITE_END();
