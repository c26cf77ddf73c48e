#include "ordcalc/attrs.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "ordcalc/error.hpp"

namespace ordcalc {

std::string CardClass::str() const {
    switch (kind) {
        case Kind::Fin: return "fin(" + std::to_string(n) + ")";
        case Kind::Aleph0: return "aleph0";
        case Kind::Kappa: return "kappa";
    }
    return "?";
}

CardClass card_mul(const CardClass& a, const CardClass& b) {
    if (a.is_zero() || b.is_zero()) return CardClass::fin(0);
    if (a.kind == CardClass::Kind::Kappa || b.kind == CardClass::Kind::Kappa)
        return CardClass::kappa();
    if (a.kind == CardClass::Kind::Aleph0 || b.kind == CardClass::Kind::Aleph0)
        return CardClass::aleph0();
    return CardClass::fin(a.n * b.n);
}

CardClass card_add(const CardClass& a, const CardClass& b) {
    if (a.kind == CardClass::Kind::Kappa || b.kind == CardClass::Kind::Kappa)
        return CardClass::kappa();
    if (a.kind == CardClass::Kind::Aleph0 || b.kind == CardClass::Kind::Aleph0)
        return CardClass::aleph0();
    return CardClass::fin(a.n + b.n);
}

CardClass card_sup(const CardClass& a, const CardClass& b) {
    if (a.kind == CardClass::Kind::Kappa || b.kind == CardClass::Kind::Kappa)
        return CardClass::kappa();
    if (a.kind == CardClass::Kind::Aleph0 || b.kind == CardClass::Kind::Aleph0)
        return CardClass::aleph0();
    return CardClass::fin(std::max(a.n, b.n));
}

namespace {

AttrReport empty_report() {
    AttrReport r;
    r.card = CardClass::fin(0);
    r.linear = true;
    r.fac = true;
    r.kappa_ac = true;
    r.ac_card = CardClass::fin(0);
    r.wf_omega = r.wf_kappa = r.cowf_omega = r.cowf_kappa = true;
    r.has_first = r.has_last = r.has_adjacent_pair = false;
    r.weakly_kappa_dense = false;
    r.embeds_weakly_kappa_dense = false;
    r.weakly_kappa_scattered = true;
    r.strongly_kappa_scattered = true;
    r.scattered_omega = true;
    r.hier.in_h = true;
    r.hier.alpha_bound = CnfOrdinal();
    r.hier.rho_bound = CnfOrdinal();
    r.hier.rho_tag = CardClass::fin(0);
    return r;
}

CnfOrdinal rho_rec(const TermPtr& t);

HierInfo hier_of(const TermPtr& t, const AttrReport& r,
                 const std::vector<HierInfo>& child_hier);

AttrReport compute(const TermPtr& t);

std::shared_mutex g_memo_mutex;
std::map<const Term*, AttrReport> g_memo;
std::vector<TermPtr> g_memo_keepalive;

AttrReport attrs_memo(const TermPtr& t) {
    {
        std::shared_lock lock(g_memo_mutex);
        auto it = g_memo.find(t.get());
        if (it != g_memo.end()) return it->second;
    }
    AttrReport r = compute(t);
    std::unique_lock lock(g_memo_mutex);
    auto [it, inserted] = g_memo.emplace(t.get(), r);
    if (inserted) g_memo_keepalive.push_back(t);
    return it->second;
}

AttrReport leaf_ord(const CnfOrdinal& o) {
    AttrReport r = empty_report();
    if (o.is_zero()) return r;
    std::uint64_t n = 0;
    bool fin = o.as_finite(n);
    r.card = fin ? CardClass::fin(n) : CardClass::aleph0();
    r.linear = true;
    r.ac_card = CardClass::fin(1);
    r.fac = r.kappa_ac = true;
    r.wf_omega = true;
    r.cowf_omega = fin;
    r.wf_kappa = r.cowf_kappa = true;
    r.has_first = true;
    // successor ordinals have a last element
    r.has_last = fin || o.terms().back().exp.is_zero();
    r.has_adjacent_pair = o >= CnfOrdinal::finite(2);
    r.scattered_omega = true;
    r.weakly_kappa_scattered = true;
    r.strongly_kappa_scattered = true;
    return r;
}

AttrReport compute(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::Ord: {
            AttrReport r = leaf_ord(t->ord);
            r.hier = hier_of(t, r, {});
            return r;
        }
        case Term::Kind::Kappa: {
            AttrReport r = empty_report();
            r.card = CardClass::kappa();
            r.linear = true;
            r.ac_card = CardClass::fin(1);
            r.fac = r.kappa_ac = true;
            r.wf_omega = true;
            r.cowf_omega = false;
            r.wf_kappa = true;
            r.cowf_kappa = false; // kappa itself is a kappa-increasing sequence
            r.has_first = true;
            r.has_last = false;
            r.has_adjacent_pair = true;
            r.scattered_omega = true;
            r.weakly_kappa_scattered = true;
            r.strongly_kappa_scattered = true;
            r.hier = hier_of(t, r, {});
            return r;
        }
        case Term::Kind::Rats: {
            AttrReport r = empty_report();
            r.card = CardClass::aleph0();
            r.linear = true;
            r.ac_card = CardClass::fin(1);
            r.fac = r.kappa_ac = true;
            r.wf_omega = r.cowf_omega = false;
            r.wf_kappa = r.cowf_kappa = true; // countable
            r.has_first = r.has_last = r.has_adjacent_pair = false;
            r.scattered_omega = false;
            r.weakly_kappa_scattered = true; // kappa exceeds aleph0
            r.strongly_kappa_scattered = true;
            r.hier = hier_of(t, r, {});
            return r;
        }
        case Term::Kind::QKappa: {
            AttrReport r = empty_report();
            r.card = CardClass::kappa();
            r.linear = true;
            r.ac_card = CardClass::fin(1);
            r.fac = r.kappa_ac = true;
            r.wf_omega = r.cowf_omega = false;
            // a strongly kappa-dense order has kappa-monotone sequences both ways
            r.wf_kappa = r.cowf_kappa = false;
            r.has_first = r.has_last = r.has_adjacent_pair = false;
            r.weakly_kappa_dense = true;
            r.embeds_weakly_kappa_dense = true;
            r.weakly_kappa_scattered = false;
            r.strongly_kappa_scattered = false;
            r.scattered_omega = false;
            r.hier = hier_of(t, r, {});
            return r;
        }
        case Term::Kind::Ac: {
            AttrReport r = empty_report();
            r.card = CardClass::fin(t->ac_n);
            r.linear = false;
            r.ac_card = CardClass::fin(t->ac_n);
            r.fac = r.kappa_ac = true;
            r.wf_omega = r.cowf_omega = r.wf_kappa = r.cowf_kappa = true;
            r.has_first = r.has_last = r.has_adjacent_pair = std::nullopt;
            r.scattered_omega = true;
            r.weakly_kappa_scattered = r.strongly_kappa_scattered = true;
            r.hier = hier_of(t, r, {});
            return r;
        }
        case Term::Kind::AcOmega: {
            AttrReport r = empty_report();
            r.card = CardClass::aleph0();
            r.linear = false;
            r.ac_card = CardClass::aleph0();
            r.fac = false;
            r.kappa_ac = true;
            r.wf_omega = r.cowf_omega = r.wf_kappa = r.cowf_kappa = true;
            r.has_first = r.has_last = r.has_adjacent_pair = std::nullopt;
            r.scattered_omega = true;
            r.weakly_kappa_scattered = r.strongly_kappa_scattered = true;
            r.hier = hier_of(t, r, {});
            return r;
        }
        case Term::Kind::Fin: {
            AttrReport r = empty_report();
            int n = t->poset.size();
            r.card = CardClass::fin(static_cast<std::uint64_t>(n));
            r.linear = t->poset.is_linear(); // false: linear finites normalize to Ord
            r.ac_card = CardClass::fin(static_cast<std::uint64_t>(t->poset.width()));
            r.fac = r.kappa_ac = true;
            r.wf_omega = r.cowf_omega = r.wf_kappa = r.cowf_kappa = true;
            r.has_first = r.has_last = r.has_adjacent_pair = std::nullopt;
            r.scattered_omega = true;
            r.weakly_kappa_scattered = r.strongly_kappa_scattered = true;
            r.hier = hier_of(t, r, {});
            return r;
        }
        case Term::Kind::Inv: {
            AttrReport c = attrs_memo(t->a);
            AttrReport r = c;
            std::swap(r.wf_omega, r.cowf_omega);
            std::swap(r.wf_kappa, r.cowf_kappa);
            std::swap(r.has_first, r.has_last);
            r.hier = hier_of(t, r, {c.hier});
            return r;
        }
        case Term::Kind::SumConst: {
            AttrReport ri = attrs_memo(t->a);
            AttrReport rb = attrs_memo(t->b);
            if (ri.card.is_zero() || rb.card.is_zero()) return empty_report();
            AttrReport r = empty_report();
            r.card = card_mul(ri.card, rb.card);
            r.linear = ri.linear && rb.linear;
            r.ac_card = card_mul(ri.ac_card, rb.ac_card);
            r.fac = r.ac_card.is_finite();
            r.kappa_ac = r.ac_card.below_kappa();
            r.wf_omega = ri.wf_omega && rb.wf_omega;
            r.cowf_omega = ri.cowf_omega && rb.cowf_omega;
            r.wf_kappa = ri.wf_kappa && rb.wf_kappa;
            r.cowf_kappa = ri.cowf_kappa && rb.cowf_kappa;
            if (r.linear) {
                r.has_first = *ri.has_first && *rb.has_first;
                r.has_last = *ri.has_last && *rb.has_last;
                r.has_adjacent_pair =
                    *rb.has_adjacent_pair ||
                    (*ri.has_adjacent_pair && *rb.has_first && *rb.has_last);
                bool single_block = rb.card == CardClass::fin(1);
                if (single_block)
                    r.weakly_kappa_dense = ri.weakly_kappa_dense;
                else {
                    bool cross_ok =
                        !ri.card.at_least(2) || !*rb.has_last || !*rb.has_first ||
                        (!*ri.has_adjacent_pair &&
                         (rb.card.kind == CardClass::Kind::Kappa || ri.weakly_kappa_dense));
                    r.weakly_kappa_dense =
                        rb.weakly_kappa_dense && cross_ok && r.card.at_least(2);
                }
            } else {
                r.has_first = r.has_last = r.has_adjacent_pair = std::nullopt;
            }
            r.embeds_weakly_kappa_dense =
                ri.embeds_weakly_kappa_dense || rb.embeds_weakly_kappa_dense;
            r.weakly_kappa_scattered =
                ri.weakly_kappa_scattered && rb.weakly_kappa_scattered;
            r.strongly_kappa_scattered = !r.embeds_weakly_kappa_dense;
            r.scattered_omega = ri.scattered_omega && rb.scattered_omega;
            if (r.card.is_finite()) r.wf_omega = r.cowf_omega = true;
            if (r.card.below_kappa()) r.wf_kappa = r.cowf_kappa = true;
            r.hier = hier_of(t, r, {ri.hier, rb.hier});
            return r;
        }
        case Term::Kind::SumList: {
            std::vector<int> live;
            std::vector<AttrReport> rs(t->family.size());
            for (std::size_t i = 0; i < t->family.size(); ++i) {
                rs[i] = attrs_memo(t->family[i]);
                if (!rs[i].card.is_zero()) live.push_back(static_cast<int>(i));
            }
            if (live.empty()) return empty_report();
            FinPoset idx = restrict_to(t->poset, live);
            AttrReport r = empty_report();
            r.card = CardClass::fin(0);
            bool lin = idx.is_linear();
            r.wf_omega = r.cowf_omega = r.wf_kappa = r.cowf_kappa = true;
            r.weakly_kappa_scattered = true;
            r.scattered_omega = true;
            r.embeds_weakly_kappa_dense = false;
            for (std::size_t k = 0; k < live.size(); ++k) {
                const AttrReport& c = rs[static_cast<std::size_t>(live[k])];
                r.card = card_add(r.card, c.card);
                lin = lin && c.linear;
                r.wf_omega = r.wf_omega && c.wf_omega;
                r.cowf_omega = r.cowf_omega && c.cowf_omega;
                r.wf_kappa = r.wf_kappa && c.wf_kappa;
                r.cowf_kappa = r.cowf_kappa && c.cowf_kappa;
                r.weakly_kappa_scattered = r.weakly_kappa_scattered && c.weakly_kappa_scattered;
                r.scattered_omega = r.scattered_omega && c.scattered_omega;
                r.embeds_weakly_kappa_dense =
                    r.embeds_weakly_kappa_dense || c.embeds_weakly_kappa_dense;
            }
            r.linear = lin;
            // maximum antichain: best combination along an index antichain
            CardClass best = CardClass::fin(0);
            for (std::uint64_t mask : antichains(idx)) {
                CardClass acc = CardClass::fin(0);
                for (std::size_t k = 0; k < live.size(); ++k)
                    if ((mask >> k) & 1u)
                        acc = card_add(acc, rs[static_cast<std::size_t>(live[k])].ac_card);
                best = card_sup(best, acc);
            }
            r.ac_card = best;
            r.fac = r.ac_card.is_finite();
            r.kappa_ac = r.ac_card.below_kappa();
            if (r.linear) {
                // live blocks in index order (index linear here)
                std::vector<int> order;
                for (int i = 0; i < idx.size(); ++i) order.push_back(i);
                std::sort(order.begin(), order.end(), [&](int x, int y) { return idx.lt(x, y); });
                auto rep = [&](int pos) -> const AttrReport& {
                    return rs[static_cast<std::size_t>(live[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])])];
                };
                int m = static_cast<int>(order.size());
                r.has_first = *rep(0).has_first;
                r.has_last = *rep(m - 1).has_last;
                bool hap = false;
                for (int i = 0; i < m; ++i) {
                    if (*rep(i).has_adjacent_pair) hap = true;
                    if (i + 1 < m && *rep(i).has_last && *rep(i + 1).has_first) hap = true;
                }
                r.has_adjacent_pair = hap;
                // weak kappa-density across the finite concatenation
                bool wkd = r.card.at_least(2);
                for (int i = 0; i < m && wkd; ++i) {
                    const AttrReport& ci = rep(i);
                    if (ci.card.at_least(2) && !ci.weakly_kappa_dense) wkd = false;
                    for (int j = i + 1; j < m && wkd; ++j) {
                        bool between_kappa = false;
                        for (int k2 = i + 1; k2 < j; ++k2)
                            if (rep(k2).card.kind == CardClass::Kind::Kappa) between_kappa = true;
                        if (*ci.has_last && *rep(j).has_first && !between_kappa) wkd = false;
                    }
                }
                r.weakly_kappa_dense = wkd;
            } else {
                r.has_first = r.has_last = r.has_adjacent_pair = std::nullopt;
                r.weakly_kappa_dense = false;
            }
            r.strongly_kappa_scattered = !r.embeds_weakly_kappa_dense;
            if (r.card.is_finite()) r.wf_omega = r.cowf_omega = true;
            if (r.card.below_kappa()) r.wf_kappa = r.cowf_kappa = true;
            std::vector<HierInfo> ch;
            for (int li : live) ch.push_back(rs[static_cast<std::size_t>(li)].hier);
            r.hier = hier_of(t, r, ch);
            return r;
        }
        case Term::Kind::LimSum: {
            AttrReport rb = attrs_memo(t->a); // base
            AttrReport rs = attrs_memo(t->b); // step
            if (rb.card.is_zero()) return empty_report();
            if (rs.card == CardClass::fin(1)) {
                // one-point step: every stage is isomorphic to the base
                AttrReport r = rb;
                r.hier = hier_of(t, r, {rb.hier, rs.hier});
                return r;
            }
            bool below = exists_below(t->b, t->basepoint);
            bool above = exists_above(t->b, t->basepoint);
            AttrReport r = empty_report();
            r.card = card_sup(card_sup(rb.card, rs.card), CardClass::aleph0());
            r.linear = rb.linear && rs.linear;
            r.ac_card = rs.ac_card == CardClass::fin(1)
                            ? rb.ac_card
                            : card_sup(card_sup(rb.ac_card, rs.ac_card), CardClass::aleph0());
            r.fac = r.ac_card.is_finite();
            r.kappa_ac = r.ac_card.below_kappa();
            r.wf_omega = !below && rb.wf_omega && rs.wf_omega;
            r.cowf_omega = !above && rb.cowf_omega && rs.cowf_omega;
            r.wf_kappa = rb.wf_kappa && rs.wf_kappa;     // regularity across omega stages
            r.cowf_kappa = rb.cowf_kappa && rs.cowf_kappa;
            if (r.linear) {
                r.has_first = *rb.has_first && !below;
                r.has_last = *rb.has_last && !above;
                r.has_adjacent_pair = false; // stages separate every pair
            } else {
                r.has_first = r.has_last = r.has_adjacent_pair = std::nullopt;
            }
            r.weakly_kappa_dense =
                r.linear && rs.card.kind == CardClass::Kind::Kappa && !rb.card.is_zero();
            r.embeds_weakly_kappa_dense = r.weakly_kappa_dense ||
                                          rb.embeds_weakly_kappa_dense ||
                                          rs.embeds_weakly_kappa_dense;
            r.weakly_kappa_scattered = rb.weakly_kappa_scattered && rs.weakly_kappa_scattered;
            r.strongly_kappa_scattered = !r.embeds_weakly_kappa_dense;
            r.scattered_omega =
                (!below && !above) && rb.scattered_omega && rs.scattered_omega;
            if (r.card.is_finite()) r.wf_omega = r.cowf_omega = true;
            if (r.card.below_kappa()) r.wf_kappa = r.cowf_kappa = true;
            r.hier = hier_of(t, r, {rb.hier, rs.hier});
            return r;
        }
    }
    throw Error("unreachable term kind");
}

HierInfo hier_of(const TermPtr& t, const AttrReport& r, const std::vector<HierInfo>& ch) {
    HierInfo h;
    if (r.fac) {
        h.rho_bound = rho_rec(t);
        h.rho_tag = r.ac_card;
    }
    if (r.card.is_finite() && r.card.n <= 1) {
        h.in_h = true;
        h.alpha_bound = CnfOrdinal();
        return h;
    }
    if (r.fac && (r.wf_kappa || r.cowf_kappa)) {
        h.in_h = true;
        h.alpha_bound = CnfOrdinal::finite(1);
        return h;
    }
    switch (t->kind) {
        case Term::Kind::Inv:
            h.in_h = ch[0].in_h;
            h.alpha_bound = ch[0].alpha_bound;
            break;
        case Term::Kind::SumConst:
            if (ch[0].in_h && ch[1].in_h) {
                h.in_h = true;
                h.alpha_bound = std_add(ch[1].alpha_bound, ch[0].alpha_bound);
            }
            break;
        case Term::Kind::SumList: {
            bool all = true;
            CnfOrdinal m;
            for (const auto& c : ch) {
                all = all && c.in_h;
                m = ord_max(m, c.alpha_bound);
            }
            if (all) {
                h.in_h = true;
                CnfOrdinal idx_bound =
                    ch.size() <= 1 ? CnfOrdinal() : CnfOrdinal::finite(1);
                h.alpha_bound = std_add(m, idx_bound);
            }
            break;
        }
        default:
            // leaves failing the base shortcut, and direct limits beyond it,
            // are not certified
            break;
    }
    return h;
}

CnfOrdinal rho_rec(const TermPtr& t) {
    if (term_is_empty(t)) return CnfOrdinal();
    switch (t->kind) {
        case Term::Kind::Ord:
        case Term::Kind::Kappa:
        case Term::Kind::Rats:
        case Term::Kind::QKappa:
            return CnfOrdinal::finite(1);
        case Term::Kind::Ac:
            return CnfOrdinal::finite(t->ac_n);
        case Term::Kind::AcOmega:
            throw DomainError("rho bound requires a FAC term");
        case Term::Kind::Fin:
            return antichain_rank_exact(t->poset);
        case Term::Kind::Inv:
            return rho_rec(t->a);
        case Term::Kind::SumConst:
            return nat_prod(rho_rec(t->a), rho_rec(t->b));
        case Term::Kind::SumList: {
            std::vector<int> live;
            for (std::size_t i = 0; i < t->family.size(); ++i)
                if (!term_is_empty(t->family[i])) live.push_back(static_cast<int>(i));
            FinPoset idx = restrict_to(t->poset, live);
            std::vector<CnfOrdinal> vals;
            for (int li : live) vals.push_back(rho_rec(t->family[static_cast<std::size_t>(li)]));
            CnfOrdinal best;
            for (std::uint64_t mask : antichains(idx)) {
                CnfOrdinal acc;
                for (std::size_t k = 0; k < vals.size(); ++k)
                    if ((mask >> k) & 1u) acc = nat_sum(acc, vals[k]);
                best = ord_max(best, acc);
            }
            return best;
        }
        case Term::Kind::LimSum:
            return nat_prod(rho_rec(t->a), rho_rec(t->b));
    }
    return CnfOrdinal();
}

} // namespace

AttrReport attrs(const TermPtr& t) { return attrs_memo(t); }

HierInfo hierarchy_info(const TermPtr& t) { return attrs_memo(t).hier; }

CnfOrdinal rho_surrogate(const TermPtr& t, RhoFormula formula) {
    AttrReport r = attrs_memo(t);
    if (!r.fac) throw DomainError("rho surrogate requires a FAC term");
    if (formula == RhoFormula::Width) return CnfOrdinal::finite(r.ac_card.n);
    return rho_rec(t);
}

KappaAcClass classify_kappa_ac(const TermPtr& t) {
    AttrReport r = attrs_memo(t);
    switch (r.ac_card.kind) {
        case CardClass::Kind::Fin: return KappaAcClass::Fac;
        case CardClass::Kind::Aleph0: return KappaAcClass::KappaAcOnly;
        case CardClass::Kind::Kappa: return KappaAcClass::LargeAntichain;
    }
    return KappaAcClass::Fac;
}

std::string kappa_ac_class_name(KappaAcClass c) {
    switch (c) {
        case KappaAcClass::Fac: return "fac";
        case KappaAcClass::KappaAcOnly: return "kappa_ac_only";
        case KappaAcClass::LargeAntichain: return "large_antichain";
    }
    return "?";
}

namespace {

bool live_leaf(const TermPtr& t, bool include_rats) {
    switch (t->kind) {
        case Term::Kind::QKappa: return true;
        case Term::Kind::Rats: return include_rats;
        case Term::Kind::Fin:
        case Term::Kind::Ord:
        case Term::Kind::Kappa:
        case Term::Kind::Ac:
        case Term::Kind::AcOmega: return false;
        case Term::Kind::Inv: return live_leaf(t->a, include_rats);
        case Term::Kind::SumConst:
            if (term_is_empty(t->a) || term_is_empty(t->b)) return false;
            return live_leaf(t->a, include_rats) || live_leaf(t->b, include_rats);
        case Term::Kind::SumList: {
            for (const auto& f : t->family)
                if (!term_is_empty(f) && live_leaf(f, include_rats)) return true;
            return false;
        }
        case Term::Kind::LimSum:
            if (term_is_empty(t->a)) return false;
            return live_leaf(t->a, include_rats) || live_leaf(t->b, include_rats);
    }
    return false;
}

} // namespace

bool live_qkappa(const TermPtr& t) { return live_leaf(t, false); }
bool live_rats_or_qkappa(const TermPtr& t) { return live_leaf(t, true); }

} // namespace ordcalc
