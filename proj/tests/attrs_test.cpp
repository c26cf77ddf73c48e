#include <doctest.h>

#include "ordcalc/attrs.hpp"
#include "ordcalc/catalog.hpp"
#include "ordcalc/error.hpp"

using namespace ordcalc;

TEST_CASE("leaf attribute table") {
    AttrReport w = attrs(t_omega());
    CHECK(w.card == CardClass::aleph0());
    CHECK(w.linear);
    CHECK(w.wf_omega);
    CHECK(!w.cowf_omega);
    CHECK(w.wf_kappa);
    CHECK(w.cowf_kappa);
    CHECK(*w.has_first);
    CHECK(!*w.has_last);
    CHECK(*w.has_adjacent_pair);

    AttrReport k = attrs(t_kappa());
    CHECK(k.card == CardClass::kappa());
    CHECK(k.wf_kappa);
    CHECK(!k.cowf_kappa);
    CHECK(k.scattered_omega);

    AttrReport q = attrs(t_rats());
    CHECK(!q.scattered_omega);
    CHECK(q.weakly_kappa_scattered); // countable orders cannot be kappa-dense
    CHECK(q.wf_kappa);
    CHECK(q.hier.in_h);

    AttrReport qk = attrs(t_qkappa());
    CHECK(qk.weakly_kappa_dense);
    CHECK(!qk.weakly_kappa_scattered);
    CHECK(!qk.wf_kappa);
    CHECK(!qk.cowf_kappa);
    CHECK(!qk.hier.in_h);

    AttrReport ac = attrs(t_ac(5));
    CHECK(!ac.linear);
    CHECK(!ac.has_first.has_value()); // not applicable off the linear fragment
    CHECK(ac.ac_card == CardClass::fin(5));

    AttrReport acw = attrs(t_ac_omega());
    CHECK(!acw.fac);
    CHECK(acw.kappa_ac);
}

TEST_CASE("L0 is kappa well founded with adjacent pairs but not kappa-dense") {
    AttrReport r = attrs(catalog_lookup("L0"));
    CHECK(!r.weakly_kappa_dense);
    CHECK(r.wf_kappa);
    CHECK(*r.has_adjacent_pair);
    CHECK(!r.wf_omega); // one point per block along the inverted index descends
    CHECK(r.linear);
    CHECK(r.card == CardClass::kappa());
}

TEST_CASE("L is kappa-dense yet kappa well founded and certified") {
    AttrReport r = attrs(catalog_lookup("L"));
    CHECK(r.weakly_kappa_dense);
    CHECK(r.wf_kappa);
    CHECK(r.weakly_kappa_scattered);
    CHECK(!r.strongly_kappa_scattered);
    CHECK(r.hier.in_h);
    CHECK(r.hier.alpha_bound == CnfOrdinal::finite(1));
    CHECK(!r.scattered_omega); // dense in itself, so the rationals embed
    CHECK(r.has_adjacent_pair.has_value());
    CHECK(!*r.has_adjacent_pair);
}

TEST_CASE("the rationals are kappa-scattered but not scattered") {
    AttrReport r = attrs(t_rats());
    CHECK(!r.scattered_omega);
    CHECK(r.weakly_kappa_scattered);
}

TEST_CASE("a dense order summed along w + w* stays weakly dense but embeds a dense one") {
    TermPtr t = parse("sum(lsum(2; w, w*), Qk)");
    AttrReport r = attrs(t);
    CHECK(r.linear);
    CHECK(r.weakly_kappa_dense);
    CHECK(!r.weakly_kappa_scattered); // the blocks themselves are dense
    CHECK(!r.hier.in_h);
}

TEST_CASE("hierarchy info examples") {
    HierInfo k = hierarchy_info(t_kappa());
    CHECK(k.in_h);
    CHECK(k.alpha_bound == CnfOrdinal::finite(1));

    HierInfo l = hierarchy_info(catalog_lookup("L"));
    CHECK(l.in_h);
    CHECK(l.alpha_bound == CnfOrdinal::finite(1));

    // neither the sum nor its inverse is kappa well founded: it holds both a
    // kappa-descending and a kappa-increasing sequence, one point per block
    TermPtr kk = parse("sum(k, k*)");
    AttrReport r = attrs(kk);
    CHECK(!r.wf_kappa);
    CHECK(!r.cowf_kappa);
    HierInfo h = hierarchy_info(kk);
    CHECK(h.in_h);
    CHECK(h.alpha_bound == CnfOrdinal::finite(2));
}

TEST_CASE("rho surrogate") {
    CHECK(rho_surrogate(t_omega()) == CnfOrdinal::finite(1));
    CHECK(rho_surrogate(parse("sum(Q, k)")) == CnfOrdinal::finite(1));
    for (std::uint64_t n = 2; n <= 5; ++n) {
        TermPtr t = t_fin(FinPoset::antichain(static_cast<int>(n)));
        CHECK(rho_surrogate(t) == antichain_rank_exact(FinPoset::antichain(static_cast<int>(n))));
        CHECK(rho_surrogate(t, RhoFormula::Width) == CnfOrdinal::finite(n));
    }
    CHECK(rho_surrogate(parse("sum(w, ac(2))")) == CnfOrdinal::finite(2));
    CHECK_THROWS_AS(rho_surrogate(t_ac_omega()), DomainError);
}

TEST_CASE("kappa antichain classification") {
    CHECK(classify_kappa_ac(catalog_lookup("remark")) == KappaAcClass::KappaAcOnly);
    CHECK(classify_kappa_ac(t_ac(5)) == KappaAcClass::Fac);
    CHECK(classify_kappa_ac(t_ac_omega()) == KappaAcClass::KappaAcOnly);
    CHECK(classify_kappa_ac(parse("sum(k, ac(2))")) == KappaAcClass::Fac);
    CHECK(classify_kappa_ac(parse("sum(ac(2), k)")) == KappaAcClass::Fac);
    // an antichain of kappa many points
    CHECK(classify_kappa_ac(parse("sum(inv(ac(2)), k)")) == KappaAcClass::Fac);
}

TEST_CASE("the remark witness separates kappa_ac from fac") {
    AttrReport r = attrs(catalog_lookup("remark"));
    CHECK(!r.fac);
    CHECK(r.kappa_ac);
    CHECK(r.weakly_kappa_scattered);
    CHECK(!r.hier.in_h);
}

TEST_CASE("liveness: leaves under an empty index are dead") {
    TermPtr dead = parse("sum(0, Qk)");
    CHECK(term_is_empty(dead));
    CHECK(!live_qkappa(dead));
    AttrReport r = attrs(dead);
    CHECK(r.weakly_kappa_scattered);
    CHECK(r.scattered_omega);
    TermPtr alive = parse("sum(1, Qk)");
    CHECK(live_qkappa(alive));
    CHECK(!attrs(alive).weakly_kappa_scattered);
}

TEST_CASE("fin-poset attributes agree with brute force, exhaustively to four points") {
    for (int n = 0; n <= 4; ++n)
        for (const FinPoset& p : augmentations(FinPoset::antichain(n))) {
            TermPtr t = t_fin(p);
            AttrReport r = attrs(t);
            CHECK(r.card == CardClass::fin(static_cast<std::uint64_t>(n)));
            CHECK(r.linear == p.is_linear());
            CHECK(r.ac_card == CardClass::fin(static_cast<std::uint64_t>(p.width())));
            CHECK(r.fac);
            CHECK(r.wf_omega);
            CHECK(r.wf_kappa);
            CHECK(r.scattered_omega);
            CHECK(r.weakly_kappa_scattered);
            CHECK(r.strongly_kappa_scattered);
            CHECK(r.hier.in_h);
        }
}

TEST_CASE("scatteredness tracks live dense leaves, except through dense limits") {
    for (const auto& e : catalog()) {
        AttrReport r = attrs(e.term);
        if (e.term->kind == Term::Kind::LimSum) continue; // dense limits have no dense leaf
        CAPTURE(e.name);
        CHECK(r.scattered_omega == !live_rats_or_qkappa(e.term));
    }
}

TEST_CASE("empty and singleton terms sit at level zero") {
    CHECK(hierarchy_info(t_nat(0)).alpha_bound == CnfOrdinal());
    CHECK(hierarchy_info(t_nat(1)).alpha_bound == CnfOrdinal());
    CHECK(hierarchy_info(t_nat(1)).in_h);
}

TEST_CASE("weak density across finite concatenations") {
    // dense pieces glued without endpoints stay dense
    CHECK(attrs(parse("lsum(2; Qk, Qk)")).weakly_kappa_dense);
    // a single point between dense pieces keeps every interval wide
    CHECK(attrs(parse("lsum(3; Qk, 1, Qk)")).weakly_kappa_dense);
    // a two-point middle block pinches an empty interval
    CHECK(!attrs(parse("lsum(3; Qk, 2, Qk)")).weakly_kappa_dense);
    // a kappa block pinches adjacent pairs inside itself
    CHECK(!attrs(parse("lsum(2; Qk, k)")).weakly_kappa_dense);
    // gluing dense blocks end to end along omega stays dense
    CHECK(attrs(parse("sum(w, Qk)")).weakly_kappa_dense);
    // a bottom endpoint alone does not pinch: nothing ends the block above
    CHECK(attrs(parse("sum(w, lsum(2; 1, Qk))")).weakly_kappa_dense);
    // blocks with both endpoints meet point-to-point across adjacent indexes
    CHECK(!attrs(parse("sum(w, lsum(3; 1, Qk, 1))")).weakly_kappa_dense);
    // a dense index keeps whole kappa-sized blocks inside every gap
    CHECK(attrs(parse("sum(Q, lsum(3; 1, Qk, 1))")).weakly_kappa_dense);
}

TEST_CASE("adjacency across finite concatenations") {
    CHECK(!*attrs(parse("lsum(2; Q, Q)")).has_adjacent_pair);
    CHECK(!*attrs(parse("lsum(2; Q, 1)")).has_adjacent_pair);
    CHECK(*attrs(parse("lsum(2; lsum(2; Q, 1), 1)")).has_adjacent_pair);
    CHECK(*attrs(parse("lsum(2; w, Q)")).has_adjacent_pair);
}

TEST_CASE("antichain cardinality through sums") {
    TermPtr big = parse("sum(k, ac(2))"); // kappa blocks of two incomparable points
    AttrReport r = attrs(big);
    CHECK(r.ac_card == CardClass::fin(2)); // blocks are comparable along kappa
    TermPtr wide = parse("sum(ac(2), ac(w))");
    CHECK(attrs(wide).ac_card == CardClass::aleph0());
    // two incomparable kappa chains still have width two
    TermPtr pair = parse("lsum(ac(2); k, k)");
    CHECK(attrs(pair).ac_card == CardClass::fin(2));
    CHECK(classify_kappa_ac(pair) == KappaAcClass::Fac);
}
