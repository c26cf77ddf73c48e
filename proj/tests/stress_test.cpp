#include <doctest.h>

#include "ordcalc/catalog.hpp"
#include "ordcalc/condense.hpp"
#include "ordcalc/error.hpp"
#include "ordcalc/sampler.hpp"

using namespace ordcalc;

// Ad-hoc compositions beyond the catalog: every claim of the attribute
// engine that the sampler can probe must survive probing.

namespace {

const char* kTerms[] = {
    "sum(Q, w)",
    "sum(w*, sum(w, k))",
    "inv(L)",
    "lsum(fin(3; 0<2, 1<2); w, k, Q)",
    "limsum(5, lsum(2; 1, w))",
    "limsum(w, 2)",
    "sum(lsum(2; w, w*), Qk)",
    "sum(k, lsum(2; Q, 1))",
    "lsum(ac(3); w, w*, ac(4))",
    "sum(inv(ord(w^2)), ac(2))",
    "inv(remark)",
    "sum(L0, fin(4; 0<2, 1<2, 1<3))",
    "limsum(L0, lsum(2; k, k))",
    "sum(Qk, w)",
    "lsum(2; limsum(w, 2), w*)",
};

} // namespace

TEST_CASE("oracle probes pass on ad-hoc compositions") {
    for (const char* text : kTerms) {
        CAPTURE(text);
        TermPtr t = parse(text);
        AttrReport r = attrs(t);
        OracleBudget budget;
        budget.samples = 2;
        budget.sample_size = 14;
        budget.rank_sample_size = 8;
        budget.chain_length = 6;
        budget.seed = 5;
        auto violations = oracle_check(t, r, budget);
        for (const auto& v : violations) MESSAGE(v.property, ": ", v.detail);
        CHECK(violations.empty());
    }
}

TEST_CASE("double inversion is neutral on ad-hoc compositions") {
    for (const char* text : kTerms) {
        CAPTURE(text);
        TermPtr t = parse(text);
        AttrReport r = attrs(t);
        AttrReport rr = attrs(t_inv(t_inv(t)));
        CHECK(r.card == rr.card);
        CHECK(r.wf_omega == rr.wf_omega);
        CHECK(r.wf_kappa == rr.wf_kappa);
        CHECK(r.weakly_kappa_dense == rr.weakly_kappa_dense);
        CHECK(r.scattered_omega == rr.scattered_omega);
        CHECK(r.hier.in_h == rr.hier.in_h);
    }
}

TEST_CASE("a growing limit with comparable basepoint densifies") {
    // stage n+1 hangs a fresh copy of 1+w above every point, so intervals
    // refill and the rationals embed even though every stage is scattered
    TermPtr t = parse("limsum(5, lsum(2; 1, w))");
    AttrReport r = attrs(t);
    CHECK(r.linear);
    CHECK(r.wf_omega);        // nothing is ever inserted below the basepoint
    CHECK(!r.cowf_omega);
    CHECK(!r.scattered_omega);
    CHECK(!r.weakly_kappa_dense); // the step is countable
    CHECK(r.weakly_kappa_scattered);
    CondensationResult q = condense_h(t);
    REQUIRE(!q.indeterminate);
    CHECK(term_eq(q.quotient, t)); // rigid: every interval is dense
}

TEST_CASE("a one-point step leaves the limit equal to its base") {
    TermPtr t = parse("limsum(w, 1)");
    AttrReport r = attrs(t);
    AttrReport w = attrs(t_omega());
    CHECK(r.card == w.card);
    CHECK(r.wf_omega == w.wf_omega);
    CHECK(r.scattered_omega == w.scattered_omega);
    CHECK(hausdorff_rank(t) == CnfOrdinal::finite(1));
    Sample s = sample_restriction(t, 5, 2);
    CHECK(s.poset.is_linear());
}