#include <doctest.h>

#include "ordcalc/checks.hpp"
#include "ordcalc/error.hpp"

using namespace ordcalc;

TEST_CASE("property suites pass") {
    for (const char* name : {"ordinal", "attrs", "roundtrip", "condense-props"}) {
        CheckResult r = run_check(name);
        for (const auto& f : r.failures) MESSAGE(f);
        CHECK(r.pass);
    }
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_AS(run_check("no-such-suite"), ValidationError);
}
