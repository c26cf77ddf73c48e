#include <doctest.h>

#include <set>

#include "ordcalc/error.hpp"
#include "ordcalc/finposet.hpp"

using namespace ordcalc;

TEST_CASE("from_relations closes transitively and reports cycles") {
    FinPoset p = FinPoset::from_relations(3, {{0, 1}, {1, 2}});
    CHECK(p.lt(0, 2)); // closed in
    CHECK(p == FinPoset::chain(3));
    CHECK(FinPoset::from_relations(2, {}) == FinPoset::antichain(2));
    try {
        FinPoset::from_relations(2, {{0, 1}, {1, 0}});
        FAIL("cycle not detected");
    } catch (const CycleError& e) {
        CHECK(e.cycle.size() >= 1);
    }
}

TEST_CASE("inverse transposes and is an involution") {
    CHECK(inverse(FinPoset::chain(3)).lt(2, 0));
    CHECK(inverse(FinPoset::antichain(4)) == FinPoset::antichain(4));
    // exhaustive on all posets over up to 5 elements
    for (int n = 1; n <= 5; ++n)
        for (const FinPoset& p : augmentations(FinPoset::antichain(n)))
            CHECK(inverse(inverse(p)) == p);
}

TEST_CASE("restriction induces the suborder") {
    CHECK(restrict_to(FinPoset::chain(3), {0, 2}) == FinPoset::chain(2));
    CHECK(restrict_to(FinPoset::chain(3), {0, 1, 2}) == FinPoset::chain(3));
    CHECK(restrict_to(FinPoset::antichain(3), {1}) == FinPoset::chain(1));
}

TEST_CASE("lexicographic sums") {
    CHECK(lex_sum(FinPoset::chain(2), {FinPoset::chain(1), FinPoset::chain(1)}) ==
          FinPoset::chain(2));
    FinPoset two_chains = lex_sum(FinPoset::antichain(2), {FinPoset::chain(2), FinPoset::chain(2)});
    CHECK(two_chains == FinPoset::from_relations(4, {{0, 1}, {2, 3}}));
    FinPoset layered = lex_sum(FinPoset::chain(2), {FinPoset::antichain(2), FinPoset::antichain(2)});
    CHECK(layered.size() == 4);
    CHECK(layered.width() == 2); // brute-force antichain scan
    // linear index and summands give a linear sum
    CHECK(lex_sum(FinPoset::chain(3), {FinPoset::chain(2), FinPoset::chain(1), FinPoset::chain(2)})
              .is_linear());
    // the width of a constant sum multiplies
    for (int wi = 1; wi <= 3; ++wi) {
        FinPoset idx = wi == 1 ? FinPoset::chain(3) : FinPoset::antichain(wi);
        FinPoset sum = lex_sum(idx, std::vector<FinPoset>(static_cast<std::size_t>(idx.size()),
                                                          FinPoset::antichain(2)));
        CHECK(sum.width() == idx.width() * 2);
    }
}

TEST_CASE("antichain enumeration") {
    CHECK(antichains(FinPoset::chain(3)).size() == 3); // singletons only
    CHECK(antichains(FinPoset::antichain(2)).size() == 3);
    for (int n = 1; n <= 5; ++n)
        CHECK(antichains(FinPoset::antichain(n)).size() == (1ull << n) - 1);
}

TEST_CASE("antichain rank") {
    for (int k = 1; k <= 5; ++k)
        CHECK(antichain_rank_exact(FinPoset::chain(k)) == CnfOrdinal::finite(1));
    for (int n = 1; n <= 5; ++n)
        CHECK(antichain_rank_exact(FinPoset::antichain(n)) ==
              CnfOrdinal::finite(static_cast<std::uint64_t>(n)));
    CHECK(antichain_rank_exact(FinPoset::chain(1)) == CnfOrdinal::finite(1));
    CHECK(antichain_rank_exact(FinPoset::antichain(0)) == CnfOrdinal());
}

TEST_CASE("embedding search") {
    CHECK(!embeds(FinPoset::chain(2), FinPoset::antichain(2)).has_value());
    CHECK(embeds(FinPoset::antichain(2), FinPoset::chain(2)).has_value());
    CHECK(!embeds(FinPoset::antichain(2), FinPoset::chain(2), EmbedMode::Strict).has_value());
    // C(5,3) monotone selections
    CHECK(count_embeddings(FinPoset::chain(3), FinPoset::chain(5)) == 10);
    // reflexive and transitive on a small zoo
    std::vector<FinPoset> zoo = {FinPoset::chain(1),
                                 FinPoset::chain(3),
                                 FinPoset::chain(4),
                                 FinPoset::antichain(2),
                                 FinPoset::antichain(3),
                                 FinPoset::from_relations(3, {{0, 2}, {1, 2}}),
                                 FinPoset::from_relations(3, {{0, 1}, {0, 2}}),
                                 FinPoset::from_relations(4, {{0, 1}, {2, 3}}),
                                 FinPoset::from_relations(4, {{0, 2}, {1, 2}, {1, 3}}),
                                 FinPoset::from_relations(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})};
    for (const auto& p : zoo) CHECK(embeds(p, p).has_value());
    for (const auto& p : zoo)
        for (const auto& q : zoo)
            for (const auto& r : zoo)
                if (embeds(p, q) && embeds(q, r)) CHECK(embeds(p, r).has_value());
}

TEST_CASE("augmentations") {
    auto of_chain = augmentations(FinPoset::chain(2));
    CHECK(of_chain.size() == 1);
    CHECK(augmentations(FinPoset::antichain(2)).size() == 3);
    // independent oracle: all strict orders on 3 labeled points
    std::size_t count = 0;
    for (unsigned mask = 0; mask < 64; ++mask) {
        std::pair<int, int> pairs[6] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
        bool lt[3][3] = {};
        for (int b = 0; b < 6; ++b)
            if ((mask >> b) & 1u) lt[pairs[b].first][pairs[b].second] = true;
        bool ok = true;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    if (lt[i][j] && lt[j][k] && (!lt[i][k] || i == k)) ok = false;
        if (ok) ++count;
    }
    CHECK(count == 19);
    CHECK(augmentations(FinPoset::antichain(3)).size() == count);
}

TEST_CASE("weakenings") {
    CHECK(weakenings(FinPoset::antichain(2)).size() == 1);
    CHECK(weakenings(FinPoset::chain(2)).size() == 2);
    // oracle: transitive subsets of {01, 12, 02}
    std::size_t count = 0;
    for (unsigned mask = 0; mask < 8; ++mask) {
        bool has01 = mask & 1, has12 = mask & 2, has02 = mask & 4;
        if (has01 && has12 && !has02) continue;
        ++count;
    }
    CHECK(count == 7);
    CHECK(weakenings(FinPoset::chain(3)).size() == count);
}

TEST_CASE("linear extensions") {
    CHECK(linear_extensions(FinPoset::chain(3)).size() == 1);
    CHECK(linear_extensions(FinPoset::antichain(3)).size() == 6);
    FinPoset v = FinPoset::from_relations(3, {{0, 2}, {1, 2}});
    for (const FinPoset& q : linear_extensions(v)) {
        CHECK(q.is_linear());
        bool contains = true;
        for (int i = 0; i < 3; ++i)
            if (v.row(i) & ~q.row(i)) contains = false;
        CHECK(contains);
    }
}

TEST_CASE("intervals") {
    CHECK(interval(FinPoset::chain(3), 0, 2) == std::vector<int>{1});
    CHECK(interval(FinPoset::chain(2), 0, 1).empty());
    CHECK(interval(FinPoset::antichain(2), 0, 1).empty());
}

TEST_CASE("isomorphism by exhaustive relabeling") {
    FinPoset v = FinPoset::from_relations(3, {{0, 2}, {1, 2}});
    FinPoset v2 = FinPoset::from_relations(3, {{2, 0}, {1, 0}});
    CHECK(isomorphic(v, v2));
    CHECK(!isomorphic(v, FinPoset::chain(3)));
    CHECK(!isomorphic(v, FinPoset::from_relations(3, {{0, 1}, {0, 2}})));
}

TEST_CASE("dot and json exports") {
    FinPoset p = FinPoset::chain(3);
    std::string dot = p.to_dot();
    CHECK(dot.find("digraph") != std::string::npos);
    // Hasse edges only: 0->1, 1->2 but not 0->2
    CHECK(dot.find("n0 -> n1") != std::string::npos);
    CHECK(dot.find("n0 -> n2") == std::string::npos);
    CHECK(p.to_json() == "{\"n\":3,\"pairs\":[[0,1],[0,2],[1,2]]}");
}
