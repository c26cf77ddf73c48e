#include <doctest.h>

#include "ordcalc/densegen.hpp"
#include "ordcalc/error.hpp"

using namespace ordcalc;

TEST_CASE("one round over a 2-chain inserts below, between and above") {
    SaturationResult r = saturate(StageOrder::chain(2), 1, 1);
    CHECK(r.order.size() == 5);
    CHECK(r.trace.size() == 3);
    // labels certify the rational embedding: strictly increasing along the order
    for (int i = 0; i + 1 < r.order.size(); ++i)
        CHECK(r.order.elements[static_cast<std::size_t>(i)].label <
              r.order.elements[static_cast<std::size_t>(i) + 1].label);
}

TEST_CASE("a degenerate seed gets a single witness") {
    SaturationResult r = saturate(StageOrder::empty(), 1, 1);
    CHECK(r.order.size() == 1);
}

TEST_CASE("after a round, all requests over the previous elements are met") {
    SaturationResult r1 = saturate(StageOrder::chain(2), 1, 1);
    CHECK(check_star(r1.order, 1, 0).empty());
    SaturationResult r = saturate(StageOrder::chain(2), 1, 2);
    CHECK(check_star(r.order, 2, 0).empty());
    SaturationResult r4 = saturate(StageOrder::chain(2), 4, 3);
    CHECK(check_star(r4.order, 3, 3).empty());
}

TEST_CASE("unmet requests of small chains") {
    CHECK(check_star(StageOrder::chain(2), 1).size() == 3);
    CHECK(check_star(StageOrder::chain(1), 1).size() == 2);
}

TEST_CASE("stages grow monotonically and deterministically") {
    SaturationResult a = saturate(StageOrder::chain(2), 3, 2);
    SaturationResult b = saturate(StageOrder::chain(2), 3, 2);
    CHECK(a.to_json() == b.to_json());
    // earlier stages embed identically: ids persist with their relative order
    SaturationResult shorter = saturate(StageOrder::chain(2), 2, 2);
    for (const auto& x : shorter.order.elements)
        for (const auto& y : shorter.order.elements)
            if (shorter.order.less(x.id, y.id)) CHECK(a.order.less(x.id, y.id));
}

TEST_CASE("back and forth extends the identity trivially") {
    SaturationResult r = saturate(StageOrder::chain(2), 2, 2);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> id_pairs;
    for (const auto& e : r.order.elements) id_pairs.emplace_back(e.id, e.id);
    BackAndForth bf = back_and_forth(r.order, r.order, id_pairs, 10);
    CHECK(bf.success);
}

TEST_CASE("back and forth between independent saturations runs ten rounds") {
    SaturationResult a = saturate(StageOrder::chain(2, 5), 3, 2);
    SaturationResult b = saturate(StageOrder::chain(2, 9), 3, 2);
    BackAndForth bf = back_and_forth(a.order, b.order, {}, 10);
    CHECK(bf.success);
    CHECK(bf.rounds_completed == 10);
    // the partial map stays order preserving
    for (auto [x1, y1] : bf.map)
        for (auto [x2, y2] : bf.map)
            if (x1 != x2) CHECK(a.order.less(x1, x2) == b.order.less(y1, y2));
}

TEST_CASE("an unsaturated chain yields a failure certificate") {
    StageOrder two = StageOrder::chain(2);
    // match both endpoints; the next element has nowhere to go
    SaturationResult rich = saturate(StageOrder::chain(2), 1, 1);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs = {
        {rich.order.elements.front().id, two.elements.front().id},
        {rich.order.elements.back().id, two.elements.back().id}};
    BackAndForth bf = back_and_forth(rich.order, two, pairs, 5);
    CHECK(!bf.success);
    CHECK(bf.failed_side == "B");
    CHECK((bf.unfillable.s.size() + bf.unfillable.t.size()) >= 1);
}

TEST_CASE("rejects non order-preserving pairs") {
    StageOrder a = StageOrder::chain(3);
    CHECK_THROWS_AS(back_and_forth(a, a, {{0, 1}, {1, 0}}, 2), ValidationError);
}

TEST_CASE("longest descending chains") {
    StageOrder five = StageOrder::chain(5);
    DescendingReport r = longest_descending(five);
    CHECK(r.plain_length == 5);
    CHECK(longest_descending(StageOrder::empty()).plain_length == 0);
    // each round inserts below the current minimum, so the birth-filtered
    // chain grows with the round count
    SaturationResult s = saturate(StageOrder::chain(2), 4, 2);
    DescendingReport d = longest_descending(s.order);
    CHECK(d.stage_filtered_length >= 4);
    // the witness chain is genuinely descending with increasing births
    for (std::size_t i = 0; i + 1 < d.stage_filtered_chain.size(); ++i) {
        CHECK(s.order.less(d.stage_filtered_chain[i + 1], d.stage_filtered_chain[i]));
    }
}
