#include <doctest.h>

#include "ordcalc/catalog.hpp"
#include "ordcalc/condense.hpp"
#include "ordcalc/error.hpp"
#include "ordcalc/intervals.hpp"
#include "ordcalc/sampler.hpp"

using namespace ordcalc;

namespace {
bool is_point(const TermPtr& t) {
    AttrReport r = attrs(t);
    return r.card == CardClass::fin(1);
}
} // namespace

TEST_CASE("finite-interval condensation collapses omega to a point") {
    CondensationResult r = condense_finite(t_omega());
    CHECK(is_point(r.quotient));
}

TEST_CASE("each omega block becomes one class") {
    // verified against the sampled finite-distance oracle below
    CondensationResult r = condense_finite(parse("sum(w, w)"));
    CHECK(term_eq(r.quotient, t_omega()));
    TermPtr t = parse("sum(w, w)");
    Sample s = sample_restriction(t, 14, 5);
    for (std::size_t i = 0; i < s.addresses.size(); ++i)
        for (std::size_t j = 0; j < s.addresses.size(); ++j) {
            if (compare(t, s.addresses[i], s.addresses[j]) != Cmp::Less) continue;
            // same block iff finitely many elements between
            const auto& bi = std::get<AddrStep::Block>(s.addresses[i].path[0].step);
            const auto& bj = std::get<AddrStep::Block>(s.addresses[j].path[0].step);
            bool same_block = *bi.index == *bj.index;
            CHECK(same_class_finite(t, s.addresses[i], s.addresses[j]) == same_block);
        }
}

TEST_CASE("dense orders are fixed by the finite condensation") {
    CondensationResult r = condense_finite(t_rats());
    CHECK(term_eq(r.quotient, t_rats()));
    CondensationResult rq = condense_finite(t_qkappa());
    CHECK(term_eq(rq.quotient, t_qkappa()));
}

TEST_CASE("condensation rejects nonlinear input") {
    CHECK_THROWS_AS(condense_finite(t_ac(2)), DomainError);
    CHECK_THROWS_AS(condense_h(catalog_lookup("remark")), DomainError);
}

TEST_CASE("hausdorff rank examples") {
    CHECK(hausdorff_rank(t_omega()) == CnfOrdinal::finite(1));
    CHECK(hausdorff_rank(parse("ord(w^2)")) == CnfOrdinal::finite(2));
    CHECK(hausdorff_rank(parse("sum(inv(w), w)")) == CnfOrdinal::finite(2));
    CHECK(hausdorff_rank(t_nat(5)) == CnfOrdinal());
    CHECK(hausdorff_rank(parse("ord(w^w)")) == CnfOrdinal::omega());
    CHECK_THROWS_AS(hausdorff_rank(t_rats()), DomainError);
    CHECK_THROWS_AS(hausdorff_rank(t_kappa()), DomainError);
}

TEST_CASE("rank agrees with literal iteration on small ranks") {
    const char* cases[] = {"w",  "w*", "ord(w^2)", "ord(w^3)", "ord(w^4)", "ord(w^2+w+1)",
                           "sum(w, w)", "sum(inv(w), w)", "sum(w, inv(w))",
                           "sum(sum(w, w), sum(w, w))", "sum(w, lsum(2; w, 1))", "5"};
    for (const char* text : cases) {
        TermPtr t = parse(text);
        CnfOrdinal rank = hausdorff_rank(t);
        std::uint64_t r = 0;
        REQUIRE(rank.as_finite(r));
        CHECK(static_cast<std::uint64_t>(condense_iterations(t)) == r);
    }
}

TEST_CASE("iteration strictly shrinks scattered nonsingleton orders") {
    TermPtr t = parse("ord(w^3)");
    CnfOrdinal prev = hausdorff_rank(t);
    for (int i = 0; i < 3; ++i) {
        CondensationResult r = condense_finite(t);
        REQUIRE(!r.indeterminate);
        t = r.quotient;
        if (attrs(t).card.is_finite()) break;
        CnfOrdinal next = hausdorff_rank(t);
        CHECK(next < prev);
        prev = next;
    }
}

TEST_CASE("rank invariant under inversion on the catalog") {
    for (const auto& e : linear_catalog()) {
        CnfOrdinal forward, backward;
        try {
            forward = hausdorff_rank(e.term);
            backward = hausdorff_rank(t_inv(e.term));
        } catch (const DomainError&) {
            continue; // non-scattered or kappa-sized entries have no rank
        }
        CAPTURE(e.name);
        CHECK(forward == backward);
    }
}

TEST_CASE("scattered-interval condensation: scattered terms collapse") {
    for (const char* name : {"L0", "L1", "kks", "wsum", "ord4", "k_wstar"}) {
        CondensationResult r = condense_h(catalog_lookup(name));
        REQUIRE(!r.indeterminate);
        CHECK(is_point(r.quotient));
    }
}

TEST_CASE("scattered-interval condensation of a rational-indexed sum keeps the index") {
    TermPtr t = parse("sum(Q, k)");
    CondensationResult r = condense_h(t);
    REQUIRE(!r.indeterminate);
    CHECK(term_eq(r.quotient, t_rats()));
    // classes are the kappa blocks: same block iff scattered interval
    Sample s = sample_restriction(t, 12, 3);
    for (std::size_t i = 0; i < s.addresses.size(); ++i)
        for (std::size_t j = 0; j < s.addresses.size(); ++j) {
            if (compare(t, s.addresses[i], s.addresses[j]) != Cmp::Less) continue;
            const auto& bi = std::get<AddrStep::Block>(s.addresses[i].path[0].step);
            const auto& bj = std::get<AddrStep::Block>(s.addresses[j].path[0].step);
            bool same_block = *bi.index == *bj.index;
            CHECK(same_class_scattered(t, s.addresses[i], s.addresses[j]) == same_block);
        }
}

TEST_CASE("dense orders are rigid for the scattered-interval condensation") {
    CondensationResult r = condense_h(t_rats());
    REQUIRE(!r.indeterminate);
    CHECK(term_eq(r.quotient, t_rats()));
    CondensationResult rl = condense_h(catalog_lookup("L"));
    REQUIRE(!rl.indeterminate);
    CHECK(term_eq(rl.quotient, catalog_lookup("L")));
}

TEST_CASE("strip operations") {
    CHECK(term_eq(strip_first(t_nat(3)), t_nat(2)));
    CHECK(term_eq(strip_first(t_omega()), t_omega()));
    CHECK(term_eq(strip_last(parse("ord(w+1)")), t_omega()));
    CHECK(term_eq(strip_last(parse("ord(w+3)")), parse("ord(w+2)")));
    CHECK_THROWS_AS(strip_last(t_omega()), DomainError);
    CHECK(head_finite(t_omega()));
    CHECK(!tail_finite(t_omega()));
    CHECK(tail_finite(parse("ord(w+1)")));
    CHECK(tail_finite(t_omega_star()));
    CHECK(!head_finite(t_rats()));
    CHECK(head_finite(parse("sum(w, 5)")));
    CHECK(!tail_finite(parse("sum(w, 5)")));
    CHECK(tail_finite(parse("sum(w, inv(w))")) == false);
    CHECK(tail_finite(parse("lsum(2; Q, w*)")));
}

TEST_CASE("transitive boundary merges collapse integer-like concatenations") {
    // the middle blocks are swallowed whole and the classes chain through
    CondensationResult r = condense_finite(parse("lsum(3; w*, 5, w)"));
    REQUIRE(!r.indeterminate);
    CHECK(is_point(r.quotient));
    CondensationResult r2 = condense_finite(parse("lsum(4; w*, 3, 3, w)"));
    REQUIRE(!r2.indeterminate);
    CHECK(is_point(r2.quotient));
    // a dense middle stops the chain
    CondensationResult r3 = condense_h(parse("lsum(3; w*, Q, w)"));
    REQUIRE(!r3.indeterminate);
    AttrReport q3 = attrs(r3.quotient);
    CHECK(q3.card == CardClass::aleph0());
    CHECK(*q3.has_first);
    CHECK(*q3.has_last);
}

TEST_CASE("rank of a constant sum dominates both parts") {
    const char* indexes[] = {"w", "w*", "ord(w^2)", "5"};
    const char* blocks[] = {"w", "ord(w^2)", "3", "sum(inv(w), w)"};
    for (const char* i : indexes)
        for (const char* b : blocks) {
            TermPtr idx = parse(i), blk = parse(b);
            CnfOrdinal r = hausdorff_rank(t_sum(idx, blk));
            CHECK(!(r < hausdorff_rank(idx)));
            CHECK(!(r < hausdorff_rank(blk)));
        }
}

TEST_CASE("boundary merges across an omega index") {
    // blocks with both a finite head and a finite tail fuse with their
    // successors; the quotient keeps one point per boundary
    TermPtr t = parse("sum(w, lsum(2; w, 1))"); // blocks of type w+1
    CondensationResult r = condense_finite(t);
    REQUIRE(!r.indeterminate);
    // each block collapses to a point glued to the next head: order type w
    CHECK(hausdorff_rank(t) == CnfOrdinal::finite(2));
    CHECK(condense_iterations(t) == 2);
}
