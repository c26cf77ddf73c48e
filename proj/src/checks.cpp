#include "ordcalc/checks.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>

#include <json.hpp>

#include "ordcalc/attrs.hpp"
#include "ordcalc/catalog.hpp"
#include "ordcalc/condense.hpp"
#include "ordcalc/densegen.hpp"
#include "ordcalc/error.hpp"
#include "ordcalc/finposet.hpp"
#include "ordcalc/intervals.hpp"
#include "ordcalc/sampler.hpp"

namespace ordcalc {

namespace {

struct Ctx {
    std::vector<std::string> failures;
    void fail(const std::string& what, const std::string& witness) {
        nlohmann::json j;
        j["what"] = what;
        j["witness"] = witness;
        failures.push_back(j.dump());
    }
    void check(bool ok, const std::string& what, const std::string& witness) {
        if (!ok) fail(what, witness);
    }
};

// ---------------------------------------------------------------------------
// criterion 1: brute-force oracles over every labeled poset on <= 5 elements

// independent enumeration: every subset of ordered pairs that happens to be
// an irreflexive transitive relation
std::uint64_t count_orders_by_subsets(int n) {
    std::vector<std::pair<int, int>> all_pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) all_pairs.emplace_back(i, j);
    std::uint64_t count = 0;
    std::uint64_t limit = 1ull << all_pairs.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        std::array<std::uint64_t, 5> rows{};
        for (std::size_t b = 0; b < all_pairs.size(); ++b)
            if ((mask >> b) & 1u)
                rows[static_cast<std::size_t>(all_pairs[b].first)] |= 1ull << all_pairs[b].second;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            std::uint64_t m = rows[static_cast<std::size_t>(i)];
            while (m && ok) {
                int k = __builtin_ctzll(m);
                m &= m - 1;
                if (rows[static_cast<std::size_t>(k)] & ~rows[static_cast<std::size_t>(i)]) ok = false;
                if ((rows[static_cast<std::size_t>(k)] >> i) & 1u) ok = false;
            }
        }
        if (ok) ++count;
    }
    return count;
}

bool is_valid_order(const FinPoset& p) {
    int n = p.size();
    for (int i = 0; i < n; ++i) {
        if (p.lt(i, i)) return false;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (p.lt(i, j) && p.lt(j, k) && !p.lt(i, k)) return false;
    }
    return true;
}

void criterion_finite_oracle(Ctx& c) {
    const std::uint64_t expected_counts[6] = {1, 1, 3, 19, 219, 4231};
    for (int n = 1; n <= 5; ++n) {
        std::vector<FinPoset> all = augmentations(FinPoset::antichain(n));
        c.check(all.size() == expected_counts[n], "poset count on " + std::to_string(n) + " points",
                std::to_string(all.size()));
        std::uint64_t brute = count_orders_by_subsets(n);
        c.check(brute == expected_counts[n],
                "subset-enumeration count on " + std::to_string(n) + " points",
                std::to_string(brute));
        CnfOrdinal one = CnfOrdinal::finite(1);
        for (const FinPoset& p : all) {
            CnfOrdinal rank = antichain_rank_exact(p);
            if (p.is_linear())
                c.check(rank == one, "linear order must have antichain rank 1", p.to_json());
            c.check(antichain_rank_exact(inverse(p)) == rank, "rank invariant under inverse",
                    p.to_json());
            // monotone under restriction
            for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
                std::vector<int> sel;
                for (int i = 0; i < n; ++i)
                    if ((mask >> i) & 1u) sel.push_back(i);
                if (!(antichain_rank_exact(restrict_to(p, sel)) <= rank)) {
                    c.fail("rank monotone under restriction",
                           p.to_json() + " subset mask " + std::to_string(mask));
                }
            }
            for (const FinPoset& q : augmentations(p)) {
                bool contains = true;
                for (int i = 0; i < n; ++i)
                    if (p.row(i) & ~q.row(i)) contains = false;
                if (!is_valid_order(q) || !contains)
                    c.fail("augmentation validity", p.to_json() + " -> " + q.to_json());
            }
            for (const FinPoset& q : weakenings(p)) {
                bool contained = true;
                for (int i = 0; i < n; ++i)
                    if (q.row(i) & ~p.row(i)) contained = false;
                if (!is_valid_order(q) || !contained)
                    c.fail("weakening validity", p.to_json() + " -> " + q.to_json());
            }
        }
        CnfOrdinal rank_ac = antichain_rank_exact(FinPoset::antichain(n));
        c.check(rank_ac == CnfOrdinal::finite(static_cast<std::uint64_t>(n)),
                "antichain rank of the n-antichain", std::to_string(n) + " -> " + rank_ac.str());
    }
}

// ---------------------------------------------------------------------------
// criterion 2: hierarchy bounds transfer to inverses and finite restrictions

void criterion_hierarchy(Ctx& c) {
    for (const auto& e : hierarchy_catalog()) {
        HierInfo h = hierarchy_info(e.term);
        HierInfo hi = hierarchy_info(t_inv(e.term));
        c.check(h.in_h == hi.in_h && h.alpha_bound == hi.alpha_bound,
                "alpha bound invariant under inverse",
                e.name + ": " + h.alpha_bound.str() + " vs " + hi.alpha_bound.str());
        if (h.in_h && !term_is_empty(e.term)) {
            Sample s = sample_restriction(e.term, 8, 11);
            HierInfo hr = hierarchy_info(t_fin(s.poset));
            c.check(hr.in_h, "finite restrictions of certified terms stay certified", e.name);
        }
    }
    auto expect_bound = [&](const char* text, std::uint64_t want) {
        HierInfo h = hierarchy_info(parse(text));
        c.check(h.in_h && h.alpha_bound == CnfOrdinal::finite(want),
                std::string("alpha bound of ") + text,
                h.alpha_bound.str() + " expected " + std::to_string(want));
    };
    expect_bound("k", 1);
    expect_bound("L", 1);
    expect_bound("sum(k, k*)", 2);
}

// ---------------------------------------------------------------------------
// criterion 3: the L0..L3 / L attribute table

void criterion_examples(Ctx& c) {
    const char* ln[] = {"L0", "L1", "L2", "L3"};
    for (const char* n : ln) {
        AttrReport r = attrs(catalog_lookup(n));
        c.check(!r.weakly_kappa_dense, "weakly_kappa_dense must fail at finite stages", n);
    }
    AttrReport l = attrs(catalog_lookup("L"));
    c.check(l.weakly_kappa_dense, "weakly_kappa_dense(L)", "expected true");
    c.check(l.wf_kappa, "wf_kappa(L)", "expected true");
    c.check(l.weakly_kappa_scattered, "weakly_kappa_scattered(L)", "expected true");
    c.check(l.hier.in_h, "in_h(L)", "expected true");
}

// ---------------------------------------------------------------------------
// criterion 4: kappa beside a countable antichain

void criterion_remark(Ctx& c) {
    AttrReport r = attrs(catalog_lookup("remark"));
    c.check(!r.fac, "fac(remark)", "expected false");
    c.check(r.kappa_ac, "kappa_ac(remark)", "expected true");
    c.check(r.weakly_kappa_scattered, "weakly_kappa_scattered(remark)", "expected true");
}

// ---------------------------------------------------------------------------
// criterion 5: condensation vs scatteredness, and rank vs literal iteration

void criterion_condense(Ctx& c) {
    for (const auto& e : linear_catalog()) {
        AttrReport r = attrs(e.term);
        CondensationResult q = condense_h(e.term);
        c.check(!q.indeterminate, "condense_h determinate on the catalog", e.name);
        if (q.indeterminate) continue;
        AttrReport rq = attrs(q.quotient);
        bool singleton = rq.card.is_finite() && rq.card.n <= 1;
        c.check(singleton == r.scattered_omega,
                "condense_h singleton iff scattered", e.name + " quotient " + q.quotient->str());
        // rank by recursion vs literal iteration on scattered terms of small rank
        if (!r.scattered_omega) continue;
        CnfOrdinal rank;
        try {
            rank = hausdorff_rank(e.term);
        } catch (const DomainError&) {
            continue; // kappa-sized orders have no rank below epsilon_0
        }
        if (rank <= CnfOrdinal::finite(4)) {
            std::uint64_t rk = 0;
            rank.as_finite(rk);
            int iters = condense_iterations(e.term);
            c.check(static_cast<std::uint64_t>(iters) == rk, "rank equals literal iteration count",
                    e.name + ": rank " + rank.str() + " vs " + std::to_string(iters));
        }
    }
}

// ---------------------------------------------------------------------------
// criterion 6: saturation, star property, back and forth

void criterion_densegen(Ctx& c) {
    SaturationResult s = saturate(StageOrder::chain(2), 4, 3);
    auto unmet = check_star(s.order, 3, 3);
    c.check(unmet.empty(), "all requests over round-3 elements met after round 4",
            unmet.empty() ? "" : unmet.front().str());
    DescendingReport d = longest_descending(s.order);
    c.check(d.stage_filtered_length >= 4, "stage-filtered descending chain length",
            std::to_string(d.stage_filtered_length));
    SaturationResult a = saturate(StageOrder::chain(2, 17), 3, 2);
    SaturationResult b = saturate(StageOrder::chain(3, 99), 3, 3);
    BackAndForth bf = back_and_forth(a.order, b.order, {}, 10);
    c.check(bf.success && bf.rounds_completed >= 10, "back and forth completes 10 rounds",
            bf.success ? std::to_string(bf.rounds_completed) : bf.unfillable.str());
}

// ---------------------------------------------------------------------------
// criterion 7: sampler soundness across the catalog

void criterion_sampler(Ctx& c) {
    const auto& entries = catalog();
    int runs = 0;
    OracleBudget budget;
    budget.samples = 1;
    budget.sample_size = 18;
    budget.rank_sample_size = 9;
    budget.chain_length = 6;
    for (std::uint64_t seed = 1; runs < 100; ++seed) {
        for (const auto& e : entries) {
            if (runs >= 100) break;
            if (term_is_empty(e.term)) continue;
            budget.seed = seed * 1000 + static_cast<std::uint64_t>(runs);
            AttrReport r = attrs(e.term);
            for (const auto& v : oracle_check(e.term, r, budget))
                c.fail("sampler violation: " + v.property, e.name + ": " + v.detail);
            ++runs;
        }
    }
    c.check(runs >= 100, "at least 100 seeded samples", std::to_string(runs));
}

// ---------------------------------------------------------------------------
// criterion 8: byte-identical reports across consecutive runs

std::string exec_capture(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    return out;
}

void criterion_determinism(Ctx& c, const std::string& tool_path) {
    if (tool_path.empty()) {
        c.fail("determinism", "no tool path provided");
        return;
    }
    const char* cmds[] = {
        " analyze L",
        " sample \"sum(w, k)\" -n 20 --seed 7",
        " rank --kind hausdorff \"ord(w^2)\"",
        " gen-dense --rounds 3 --bound 2 --seed 5",
    };
    for (const char* args : cmds) {
        std::string cmd = "\"" + tool_path + "\"" + args + " 2>/dev/null";
        std::string first = exec_capture(cmd);
        std::string second = exec_capture(cmd);
        c.check(!first.empty() && first == second, "byte-identical output", args);
    }
}

// ---------------------------------------------------------------------------
// extra suites: module-level property checks used by the unit tests and CLI

void suite_ordinal(Ctx& c) {
    SplitMix64 rng(424242);
    auto rand_ord = [&](auto&& self, int depth) -> CnfOrdinal {
        std::vector<CnfTerm> ts;
        std::uint64_t k = rng.below(3);
        for (std::uint64_t i = 0; i <= k; ++i) {
            CnfOrdinal e = depth > 0 && rng.below(2) ? self(self, depth - 1)
                                                     : CnfOrdinal::finite(rng.below(4));
            ts.push_back(CnfTerm{e, 1 + rng.below(4)});
        }
        return CnfOrdinal::from_terms(std::move(ts));
    };
    for (int i = 0; i < 500; ++i) {
        CnfOrdinal a = rand_ord(rand_ord, 2);
        CnfOrdinal b = rand_ord(rand_ord, 2);
        CnfOrdinal d = rand_ord(rand_ord, 2);
        c.check(nat_sum(a, b) == nat_sum(b, a), "nat_sum commutative", a.str() + ", " + b.str());
        c.check(nat_sum(nat_sum(a, b), d) == nat_sum(a, nat_sum(b, d)), "nat_sum associative",
                a.str() + ", " + b.str() + ", " + d.str());
        c.check(std_add(std_add(a, b), d) == std_add(a, std_add(b, d)), "std_add associative",
                a.str());
        c.check(!(nat_sum(a, b) < std_add(a, b)), "nat_sum dominates std_add",
                a.str() + ", " + b.str());
        c.check(nat_prod(a, nat_sum(b, d)) == nat_sum(nat_prod(a, b), nat_prod(a, d)),
                "nat_prod distributes over nat_sum", a.str());
        auto ab = a <=> b;
        auto ba = b <=> a;
        c.check((ab == std::strong_ordering::less) == (ba == std::strong_ordering::greater),
                "cmp antisymmetric", a.str() + ", " + b.str());
        if (a < b && b < d) c.check(a < d, "cmp transitive", a.str());
    }
    // std_add is not commutative: 1 + w = w but w + 1 > w
    CnfOrdinal one = CnfOrdinal::finite(1), w = CnfOrdinal::omega();
    c.check(std_add(one, w) == w && !(std_add(w, one) == w), "std_add non-commutative witness",
            "1, w");
}

void suite_attrs(Ctx& c) {
    for (const auto& e : catalog()) {
        AttrReport r = attrs(e.term);
        AttrReport rr = attrs(t_inv(t_inv(e.term)));
        bool same = r.card == rr.card && r.linear == rr.linear && r.fac == rr.fac &&
                    r.wf_omega == rr.wf_omega && r.wf_kappa == rr.wf_kappa &&
                    r.cowf_omega == rr.cowf_omega && r.cowf_kappa == rr.cowf_kappa &&
                    r.has_first == rr.has_first && r.has_last == rr.has_last &&
                    r.weakly_kappa_dense == rr.weakly_kappa_dense &&
                    r.weakly_kappa_scattered == rr.weakly_kappa_scattered &&
                    r.strongly_kappa_scattered == rr.strongly_kappa_scattered &&
                    r.scattered_omega == rr.scattered_omega;
        c.check(same, "double inverse fixes the report", e.name);
        AttrReport ri = attrs(t_inv(e.term));
        c.check(ri.wf_omega == r.cowf_omega && ri.cowf_omega == r.wf_omega &&
                    ri.wf_kappa == r.cowf_kappa && ri.cowf_kappa == r.wf_kappa &&
                    ri.has_first == r.has_last && ri.has_last == r.has_first &&
                    ri.card == r.card && ri.fac == r.fac,
                "inverse swaps the oriented attributes", e.name);
        c.check(!r.strongly_kappa_scattered || r.weakly_kappa_scattered,
                "strongly scattered implies weakly scattered", e.name);
        c.check(!r.weakly_kappa_dense || r.embeds_weakly_kappa_dense,
                "weakly dense implies embeds weakly dense", e.name);
        c.check(!r.weakly_kappa_dense || !r.strongly_kappa_scattered,
                "weakly dense excludes strongly scattered", e.name);
        c.check(!r.hier.in_h || (r.weakly_kappa_scattered && r.fac),
                "certified terms are scattered FAC", e.name);
        c.check(!r.card.below_kappa() || r.wf_kappa, "small terms are kappa well founded",
                e.name);
        c.check(!r.fac || r.kappa_ac, "fac implies kappa_ac", e.name);
        // attributes of finite terms agree with brute force on the poset
        if (e.term->kind == Term::Kind::Fin) {
            const FinPoset& p = e.term->poset;
            c.check(r.linear == p.is_linear(), "linear agrees with brute force", e.name);
            c.check(r.ac_card == CardClass::fin(static_cast<std::uint64_t>(p.width())),
                    "ac_card agrees with brute force", e.name);
        }
    }
    // constant-family sums agree between the two sum forms
    TermPtr b = parse("sum(w, ac(2))");
    TermPtr as_list = t_lsum(FinPoset::chain(2), {b, b});
    TermPtr as_const = t_sum(t_nat(2), b);
    AttrReport rl = attrs(as_list), rc = attrs(as_const);
    c.check(rl.card == rc.card && rl.fac == rc.fac && rl.ac_card == rc.ac_card &&
                rl.wf_omega == rc.wf_omega && rl.scattered_omega == rc.scattered_omega &&
                rl.weakly_kappa_scattered == rc.weakly_kappa_scattered,
            "constant SumList agrees with SumConst", "sum over chain(2)");
}

void suite_roundtrip(Ctx& c) {
    for (const auto& e : catalog()) {
        TermPtr again = parse(e.term->str());
        c.check(term_eq(again, e.term), "parse(print(t)) == t", e.name + ": " + e.term->str());
    }
}

void suite_condense_props(Ctx& c) {
    for (const auto& e : linear_catalog()) {
        // hausdorff rank invariant under inverse, when defined
        try {
            CnfOrdinal r1 = hausdorff_rank(e.term);
            CnfOrdinal r2 = hausdorff_rank(t_inv(e.term));
            c.check(r1 == r2, "rank invariant under inverse", e.name);
        } catch (const DomainError&) {
        }
        // sampled convexity and class-order checks for both condensations
        if (term_is_empty(e.term)) continue;
        Sample s = sample_restriction(e.term, 12, 31);
        const auto& addr = s.addresses;
        auto classes_ok = [&](auto same_class, const char* mode) {
            for (std::size_t i = 0; i < addr.size(); ++i)
                for (std::size_t j = 0; j < addr.size(); ++j) {
                    if (i == j) continue;
                    if (compare(e.term, addr[i], addr[j]) != Cmp::Less) continue;
                    for (std::size_t k = 0; k < addr.size(); ++k) {
                        if (k == i || k == j) continue;
                        if (compare(e.term, addr[i], addr[k]) == Cmp::Less &&
                            compare(e.term, addr[k], addr[j]) == Cmp::Less &&
                            same_class(e.term, addr[i], addr[j]) &&
                            !same_class(e.term, addr[i], addr[k]))
                            c.fail(std::string(mode) + " classes convex",
                                   e.name + ": " + addr[i].str() + " ~ " + addr[j].str() +
                                       " but not " + addr[k].str());
                    }
                }
        };
        classes_ok([](const TermPtr& t, const Address& x, const Address& y) {
            return same_class_finite(t, x, y);
        }, "finite-interval");
        classes_ok([](const TermPtr& t, const Address& x, const Address& y) {
            return same_class_scattered(t, x, y);
        }, "scattered-interval");
    }
}

using SuiteFn = std::function<void(Ctx&, const std::string&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> list = {
        {"finite-oracle", [](Ctx& c, const std::string&) { criterion_finite_oracle(c); }},
        {"hierarchy", [](Ctx& c, const std::string&) { criterion_hierarchy(c); }},
        {"examples", [](Ctx& c, const std::string&) { criterion_examples(c); }},
        {"remark", [](Ctx& c, const std::string&) { criterion_remark(c); }},
        {"condense", [](Ctx& c, const std::string&) { criterion_condense(c); }},
        {"densegen", [](Ctx& c, const std::string&) { criterion_densegen(c); }},
        {"sampler", [](Ctx& c, const std::string&) { criterion_sampler(c); }},
        {"determinism",
         [](Ctx& c, const std::string& tool) { criterion_determinism(c, tool); }},
        {"ordinal", [](Ctx& c, const std::string&) { suite_ordinal(c); }},
        {"attrs", [](Ctx& c, const std::string&) { suite_attrs(c); }},
        {"roundtrip", [](Ctx& c, const std::string&) { suite_roundtrip(c); }},
        {"condense-props", [](Ctx& c, const std::string&) { suite_condense_props(c); }},
    };
    return list;
}

} // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> names;
    for (const auto& [n, fn] : suites()) names.push_back(n);
    return names;
}

CheckResult run_check(const std::string& name, const std::string& tool_path) {
    for (const auto& [n, fn] : suites()) {
        if (n != name) continue;
        CheckResult r;
        r.name = name;
        Ctx ctx;
        auto start = std::chrono::steady_clock::now();
        try {
            fn(ctx, tool_path);
        } catch (const std::exception& e) {
            ctx.fail("exception", e.what());
        }
        auto end = std::chrono::steady_clock::now();
        r.seconds = std::chrono::duration<double>(end - start).count();
        r.failures = std::move(ctx.failures);
        r.pass = r.failures.empty();
        return r;
    }
    throw ValidationError("unknown check suite '" + name + "'");
}

std::vector<CheckResult> run_all_checks(const std::string& tool_path) {
    std::vector<CheckResult> out;
    for (const auto& [n, fn] : suites()) out.push_back(run_check(n, tool_path));
    return out;
}

std::string check_results_json(const std::vector<CheckResult>& results) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["checks"] = nlohmann::json::array();
    bool all = true;
    for (const auto& r : results) {
        nlohmann::json e;
        e["name"] = r.name;
        e["pass"] = r.pass;
        e["seconds"] = r.seconds;
        e["failures"] = nlohmann::json::array();
        for (const auto& f : r.failures) e["failures"].push_back(nlohmann::json::parse(f));
        j["checks"].push_back(e);
        all = all && r.pass;
    }
    j["pass"] = all;
    return j.dump(2);
}

} // namespace ordcalc
