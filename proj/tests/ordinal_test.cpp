#include <doctest.h>

#include "ordcalc/error.hpp"
#include "ordcalc/ordinal.hpp"

using namespace ordcalc;

namespace {
CnfOrdinal o(const std::string& s) { return parse_cnf(s); }
} // namespace

TEST_CASE("comparison follows the leading terms") {
    CHECK(o("w") == o("w"));
    CHECK(o("w+1") < o("w*2"));
    CHECK(o("w^w") > o("w^3*5"));
    CHECK(o("0") < o("1"));
    CHECK(o("w^2*3+w+4") == o("w^2*3+w+4"));
}

TEST_CASE("standard addition absorbs low terms") {
    CHECK(std_add(o("1"), o("w")) == o("w"));
    CHECK(std_add(o("w"), o("1")) == o("w+1"));
    // the trailing 3 is absorbed by the following w
    CHECK(std_add(o("w*2+3"), o("w")) == o("w*3"));
}

TEST_CASE("natural sum merges coefficientwise") {
    CHECK(nat_sum(o("1"), o("w")) == o("w+1"));
    CHECK(nat_sum(o("w*2+3"), o("w+5")) == o("w*3+8"));
    CHECK(nat_sum(o("w^2+w*4"), o("0")) == o("w^2+w*4"));
}

TEST_CASE("natural product distributes with nat_sum on exponents") {
    CHECK(nat_prod(o("w"), o("w")) == o("w^2"));
    CHECK(nat_prod(o("w^2+w"), o("0")) == o("0"));
    CHECK(nat_prod(o("w+1"), o("2")) == o("w*2+2"));
    CHECK(nat_prod(o("w+1"), o("w+1")) == o("w^2+w*2+1"));
    CHECK(nat_prod(o("2"), o("w+1")) == o("w*2+2"));
}

TEST_CASE("text syntax round trips") {
    const char* samples[] = {"0", "1", "17", "w", "w*3", "w+1", "w^2*3+w+4", "w^w", "w^(w+1)*2",
                             "w^(w^2)+w^3*5+1"};
    for (const char* s : samples) CHECK(parse_cnf(o(s).str()) == o(s));
}

TEST_CASE("parser rejects malformed ordinals") {
    CHECK_THROWS_AS(parse_cnf("w+w"), ParseError);      // not strictly decreasing
    CHECK_THROWS_AS(parse_cnf("1+w"), ParseError);      // increasing
    CHECK_THROWS_AS(parse_cnf("w^"), ParseError);
    CHECK_THROWS_AS(parse_cnf("w*0"), ParseError);
    CHECK_THROWS_AS(parse_cnf(""), ParseError);
}

TEST_CASE("depth cap rejects deeply nested exponents") {
    int old = ordinal_depth_cap();
    set_ordinal_depth_cap(2);
    CHECK_NOTHROW(parse_cnf("w^w"));
    CHECK_THROWS_AS(parse_cnf("w^(w^(w^w))"), ValidationError);
    set_ordinal_depth_cap(old);
}
