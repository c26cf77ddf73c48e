#include <doctest.h>

#include "ordcalc/catalog.hpp"
#include "ordcalc/error.hpp"
#include "ordcalc/parser.hpp"

using namespace ordcalc;

TEST_CASE("basic forms") {
    TermPtr t = parse("sum(inv(w), k)");
    CHECK(t->kind == Term::Kind::SumConst);
    CHECK(t->a->kind == Term::Kind::Inv);
    CHECK(t->b->kind == Term::Kind::Kappa);
    CHECK(term_eq(parse("w*"), parse("inv(w)")));
    CHECK(term_eq(parse("k*"), parse("inv(k)")));
    CHECK(parse("Qk")->kind == Term::Kind::QKappa);
    CHECK(parse("Q")->kind == Term::Kind::Rats);
    CHECK(parse("ac(w)")->kind == Term::Kind::AcOmega);
}

TEST_CASE("finite posets normalize to ordinals when linear") {
    TermPtr chain = parse("fin(3; 0<1, 1<2)");
    CHECK(chain->kind == Term::Kind::Ord);
    CHECK(term_eq(chain, t_nat(3)));
    TermPtr vee = parse("fin(3; 0<2, 1<2)");
    CHECK(vee->kind == Term::Kind::Fin);
    CHECK(term_eq(parse("ac(1)"), t_nat(1)));
    CHECK(term_eq(parse("ord(w)"), parse("w")));
}

TEST_CASE("catalog identifiers resolve") {
    TermPtr l0 = parse("L0");
    CHECK(term_eq(l0, parse("sum(w*, k)")));
    CHECK(catalog_lookup("L") != nullptr);
    CHECK(catalog_lookup("nope") == nullptr);
    CHECK_THROWS_AS(parse("unknown_name"), ParseError);
}

TEST_CASE("limsum forms") {
    TermPtr l = parse("limsum(L0, L0)");
    CHECK(l->kind == Term::Kind::LimSum);
    CHECK(term_eq(l, catalog_lookup("L")));
    TermPtr explicit_bp = parse("limsum(L0, L0, [{0}].{0})");
    CHECK(term_eq(explicit_bp, l)); // the canonical basepoint written out
    TermPtr other_bp = parse("limsum(L0, L0, [{1}].{2})");
    CHECK(!term_eq(other_bp, l));
    CHECK_THROWS_AS(parse("limsum(w, 0)"), ValidationError); // empty step
    CHECK_THROWS_AS(parse("limsum(w, w, {w*2})"), ValidationError); // bad basepoint
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse("sum(w,, k)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col >= 6);
    }
    CHECK_THROWS_AS(parse("lsum(ac(2); k)"), ValidationError); // arity mismatch
    CHECK_THROWS_AS(parse("fin(2; 0<1, 1<0)"), CycleError);
    CHECK_THROWS_AS(parse("sum(w, w) trailing"), ParseError);
}

TEST_CASE("round trips through printing") {
    for (const auto& e : catalog()) {
        CAPTURE(e.name);
        TermPtr again = parse(e.term->str());
        CHECK(term_eq(again, e.term));
    }
    // a non-default basepoint survives the round trip
    TermPtr t = parse("limsum(L0, L0, [{1}].{2})");
    CHECK(term_eq(parse(t->str()), t));
}
