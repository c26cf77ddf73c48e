#include "ordcalc/condense.hpp"

#include <algorithm>
#include <atomic>

#include "ordcalc/attrs.hpp"
#include "ordcalc/error.hpp"

namespace ordcalc {

namespace {

void require_linear(const TermPtr& t, const char* op) {
    if (!attrs(t).linear) throw DomainError(std::string(op) + " requires a linear term");
}

// quotient of an ordinal by the finite-interval equivalence: one class per
// omega-block plus one for a trailing finite segment
CnfOrdinal ord_omega_quotient(const CnfOrdinal& a) {
    std::vector<CnfTerm> out;
    bool finite_tail = false;
    for (const auto& t : a.terms()) {
        if (t.exp.is_zero()) {
            finite_tail = true;
            continue;
        }
        // w * q recovers the term, with 1 + e = e for infinite exponents
        std::uint64_t efin = 0;
        if (t.exp.as_finite(efin))
            out.push_back(CnfTerm{CnfOrdinal::finite(efin - 1), t.coeff});
        else
            out.push_back(CnfTerm{t.exp, t.coeff});
    }
    CnfOrdinal q = CnfOrdinal::from_terms(std::move(out));
    if (finite_tail) q = std_add(q, CnfOrdinal::finite(1));
    return q;
}

ClassDesc desc(const std::string& pattern, const std::string& rep) {
    return ClassDesc{pattern, rep};
}

} // namespace

bool head_finite(const TermPtr& t) {
    if (term_is_empty(t)) return false;
    switch (t->kind) {
        case Term::Kind::Ord:
        case Term::Kind::Kappa:
            return true; // the least element has nothing below
        case Term::Kind::Rats:
        case Term::Kind::QKappa:
            return false;
        case Term::Kind::Fin:
        case Term::Kind::Ac:
        case Term::Kind::AcOmega:
            return true;
        case Term::Kind::Inv:
            return tail_finite(t->a);
        case Term::Kind::SumConst: {
            AttrReport ri = attrs(t->a), rb = attrs(t->b);
            if (rb.card.is_finite() && head_finite(t->a)) return true;
            return ri.has_first.value_or(false) && head_finite(t->b);
        }
        case Term::Kind::SumList: {
            // a prefix of finite blocks followed by a head-finite block
            std::vector<int> order;
            for (int i = 0; i < t->poset.size(); ++i)
                if (!term_is_empty(t->family[static_cast<std::size_t>(i)])) order.push_back(i);
            std::sort(order.begin(), order.end(),
                      [&](int x, int y) { return t->poset.lt(x, y); });
            for (int b : order) {
                const TermPtr& blk = t->family[static_cast<std::size_t>(b)];
                if (head_finite(blk) ) return true;
                if (!attrs(blk).card.is_finite()) return false;
            }
            return false;
        }
        case Term::Kind::LimSum: {
            AttrReport rs = attrs(t->b);
            if (rs.card == CardClass::fin(1)) return head_finite(t->a);
            return attrs(t).has_first.value_or(false);
        }
    }
    return false;
}

bool tail_finite(const TermPtr& t) {
    if (term_is_empty(t)) return false;
    switch (t->kind) {
        case Term::Kind::Ord: {
            // successor ordinals have a finite final segment
            return t->ord.is_finite() || t->ord.terms().back().exp.is_zero();
        }
        case Term::Kind::Kappa:
            return false;
        case Term::Kind::Rats:
        case Term::Kind::QKappa:
            return false;
        case Term::Kind::Fin:
        case Term::Kind::Ac:
        case Term::Kind::AcOmega:
            return true;
        case Term::Kind::Inv:
            return head_finite(t->a);
        case Term::Kind::SumConst: {
            AttrReport ri = attrs(t->a), rb = attrs(t->b);
            if (rb.card.is_finite() && tail_finite(t->a)) return true;
            return ri.has_last.value_or(false) && tail_finite(t->b);
        }
        case Term::Kind::SumList: {
            std::vector<int> order;
            for (int i = 0; i < t->poset.size(); ++i)
                if (!term_is_empty(t->family[static_cast<std::size_t>(i)])) order.push_back(i);
            std::sort(order.begin(), order.end(),
                      [&](int x, int y) { return t->poset.lt(x, y); });
            std::reverse(order.begin(), order.end());
            for (int b : order) {
                const TermPtr& blk = t->family[static_cast<std::size_t>(b)];
                if (tail_finite(blk)) return true;
                if (!attrs(blk).card.is_finite()) return false;
            }
            return false;
        }
        case Term::Kind::LimSum: {
            AttrReport rs = attrs(t->b);
            if (rs.card == CardClass::fin(1)) return tail_finite(t->a);
            return attrs(t).has_last.value_or(false);
        }
    }
    return false;
}

TermPtr strip_first(const TermPtr& t) {
    if (term_is_empty(t)) throw DomainError("cannot strip the empty order");
    switch (t->kind) {
        case Term::Kind::Ord: {
            std::uint64_t n = 0;
            if (t->ord.as_finite(n)) return t_nat(n - 1);
            return t; // removing the least point of an infinite ordinal
        }
        case Term::Kind::Kappa:
            return t;
        case Term::Kind::Inv:
            return t_inv(strip_last(t->a));
        case Term::Kind::SumConst: {
            AttrReport ri = attrs(t->a);
            if (!ri.has_first.value_or(false))
                throw DomainError("term has no first element to strip");
            TermPtr first_block = strip_first(t->b);
            TermPtr rest = t_sum(strip_first(t->a), t->b);
            return t_lsum(FinPoset::chain(2), {first_block, rest});
        }
        case Term::Kind::SumList: {
            std::vector<int> order;
            for (int i = 0; i < t->poset.size(); ++i)
                if (!term_is_empty(t->family[static_cast<std::size_t>(i)])) order.push_back(i);
            std::sort(order.begin(), order.end(),
                      [&](int x, int y) { return t->poset.lt(x, y); });
            if (order.empty()) throw DomainError("cannot strip the empty order");
            std::vector<TermPtr> fam = t->family;
            int first = order.front();
            fam[static_cast<std::size_t>(first)] =
                strip_first(fam[static_cast<std::size_t>(first)]);
            return t_lsum(t->poset, std::move(fam));
        }
        default:
            throw DomainError("strip_first unsupported for term " + t->str());
    }
}

TermPtr strip_last(const TermPtr& t) {
    if (term_is_empty(t)) throw DomainError("cannot strip the empty order");
    switch (t->kind) {
        case Term::Kind::Ord: {
            std::uint64_t n = 0;
            if (t->ord.as_finite(n)) return t_nat(n - 1);
            // removing the greatest point of a successor ordinal
            std::vector<CnfTerm> ts = t->ord.terms();
            if (!ts.back().exp.is_zero())
                throw DomainError("term has no last element to strip");
            if (ts.back().coeff == 1)
                ts.pop_back();
            else
                ts.back().coeff -= 1;
            return t_ord(CnfOrdinal::from_terms(std::move(ts)));
        }
        case Term::Kind::Inv:
            return t_inv(strip_first(t->a));
        case Term::Kind::SumConst: {
            AttrReport ri = attrs(t->a);
            if (!ri.has_last.value_or(false))
                throw DomainError("term has no last element to strip");
            TermPtr last_block = strip_last(t->b);
            TermPtr rest = t_sum(strip_last(t->a), t->b);
            return t_lsum(FinPoset::chain(2), {rest, last_block});
        }
        case Term::Kind::SumList: {
            std::vector<int> order;
            for (int i = 0; i < t->poset.size(); ++i)
                if (!term_is_empty(t->family[static_cast<std::size_t>(i)])) order.push_back(i);
            std::sort(order.begin(), order.end(),
                      [&](int x, int y) { return t->poset.lt(x, y); });
            if (order.empty()) throw DomainError("cannot strip the empty order");
            std::vector<TermPtr> fam = t->family;
            int last = order.back();
            fam[static_cast<std::size_t>(last)] = strip_last(fam[static_cast<std::size_t>(last)]);
            return t_lsum(t->poset, std::move(fam));
        }
        case Term::Kind::Kappa:
            throw DomainError("term has no last element to strip");
        default:
            throw DomainError("strip_last unsupported for term " + t->str());
    }
}

namespace {

// Shared fusion for finite concatenations: each live block contributes its
// quotient; when a block can reach its upper boundary in finitely many
// steps (or with a scattered tail, for the scattered-interval mode) and the
// next block its lower boundary, the two boundary classes merge into one.
struct CondMode {
    // quotient of one block
    virtual CondensationResult block(const TermPtr& b) const = 0;
    // can the block's last class merge with a following first class
    virtual bool merge_right(const TermPtr& b) const = 0;
    virtual bool merge_left(const TermPtr& b) const = 0;
    virtual const char* name() const = 0;
    virtual ~CondMode() = default;
};

CondensationResult condense_finite_impl(const TermPtr& t);
CondensationResult condense_h_impl(const TermPtr& t);

struct FiniteMode : CondMode {
    CondensationResult block(const TermPtr& b) const override { return condense_finite_impl(b); }
    bool merge_right(const TermPtr& b) const override { return tail_finite(b); }
    bool merge_left(const TermPtr& b) const override { return head_finite(b); }
    const char* name() const override { return "finite-interval"; }
};

struct HMode : CondMode {
    CondensationResult block(const TermPtr& b) const override { return condense_h_impl(b); }
    bool merge_right(const TermPtr& b) const override {
        AttrReport r = attrs(b);
        if (r.scattered_omega) return true;
        CondensationResult q = condense_h_impl(b);
        return !q.indeterminate && attrs(q.quotient).has_last.value_or(false);
    }
    bool merge_left(const TermPtr& b) const override {
        AttrReport r = attrs(b);
        if (r.scattered_omega) return true;
        CondensationResult q = condense_h_impl(b);
        return !q.indeterminate && attrs(q.quotient).has_first.value_or(false);
    }
    const char* name() const override { return "scattered-interval"; }
};

CondensationResult fuse_concat(const std::vector<TermPtr>& blocks, const CondMode& mode) {
    CondensationResult out;
    std::vector<TermPtr> pieces;
    std::vector<char> is_boundary; // boundary points created by earlier merges
    bool prev_merges_right = false;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        CondensationResult q = mode.block(blocks[i]);
        if (q.indeterminate) return q;
        TermPtr piece = q.quotient;
        if (!pieces.empty() && prev_merges_right && mode.merge_left(blocks[i])) {
            // the previous block's top class absorbs this block's bottom
            // class; when the previous block was itself swallowed whole, the
            // classes chain into the boundary point already in place
            std::size_t j = pieces.size();
            while (j > 0 && !is_boundary[j - 1] && term_is_empty(pieces[j - 1])) --j;
            if (j > 0 && !is_boundary[j - 1]) {
                pieces[j - 1] = strip_last(pieces[j - 1]);
                pieces.push_back(t_nat(1));
                is_boundary.push_back(1);
            }
            piece = strip_first(piece);
            out.class_map.push_back(desc("boundary classes of consecutive blocks",
                                         "merged into one class"));
        }
        pieces.push_back(piece);
        is_boundary.push_back(0);
        for (auto& c : q.class_map) out.class_map.push_back(std::move(c));
        prev_merges_right = mode.merge_right(blocks[i]);
    }
    out.quotient = t_lsum(FinPoset::chain(static_cast<int>(pieces.size())), pieces);
    return out;
}

CondensationResult indeterminate(const std::string& why) {
    CondensationResult r;
    r.quotient = t_nat(0);
    r.indeterminate = true;
    r.note = why;
    return r;
}

CondensationResult point_quotient(const char* what) {
    CondensationResult r;
    r.quotient = t_nat(1);
    r.class_map.push_back(desc(what, "the whole order"));
    return r;
}

CondensationResult identity_quotient(const TermPtr& t, const char* why) {
    CondensationResult r;
    r.quotient = t;
    r.class_map.push_back(desc(why, "each element is its own class"));
    return r;
}

std::vector<TermPtr> live_blocks_in_order(const TermPtr& t) {
    std::vector<int> order;
    for (int i = 0; i < t->poset.size(); ++i)
        if (!term_is_empty(t->family[static_cast<std::size_t>(i)])) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return t->poset.lt(x, y); });
    std::vector<TermPtr> blocks;
    for (int i : order) blocks.push_back(t->family[static_cast<std::size_t>(i)]);
    return blocks;
}

CondensationResult condense_finite_impl(const TermPtr& t) {
    AttrReport r = attrs(t);
    if (r.card.is_zero()) {
        CondensationResult res;
        res.quotient = t_nat(0);
        return res;
    }
    if (r.card.is_finite()) return point_quotient("all elements finitely apart");
    switch (t->kind) {
        case Term::Kind::Ord: {
            CondensationResult res;
            res.quotient = t_ord(ord_omega_quotient(t->ord));
            res.class_map.push_back(
                desc("omega-blocks [w*q, w*(q+1)) and a trailing finite segment",
                     "least element of each block"));
            return res;
        }
        case Term::Kind::Kappa: {
            CondensationResult res;
            res.quotient = t;
            res.class_map.push_back(desc("omega-blocks of kappa", "least element of each block"));
            return res;
        }
        case Term::Kind::Rats:
        case Term::Kind::QKappa:
            return identity_quotient(t, "no two points are finitely apart");
        case Term::Kind::Inv: {
            CondensationResult inner = condense_finite_impl(t->a);
            if (inner.indeterminate) return inner;
            CondensationResult res = inner;
            AttrReport q = attrs(inner.quotient);
            res.quotient = q.card.is_finite() && q.card.n <= 1 ? inner.quotient
                                                               : t_inv(inner.quotient);
            return res;
        }
        case Term::Kind::SumConst: {
            AttrReport rb = attrs(t->b);
            if (rb.card.is_finite()) {
                CondensationResult inner = condense_finite_impl(t->a);
                if (inner.indeterminate) return inner;
                inner.class_map.insert(inner.class_map.begin(),
                                       desc("whole blocks grouped by the index classes",
                                            "block of the index representative"));
                return inner;
            }
            CondensationResult bq = condense_finite_impl(t->b);
            if (bq.indeterminate) return bq;
            AttrReport rq = attrs(bq.quotient);
            bool merge = tail_finite(t->b) && head_finite(t->b) &&
                         attrs(t->a).has_adjacent_pair.value_or(false);
            if (rq.card == CardClass::fin(1)) {
                if (merge) {
                    CondensationResult inner = condense_finite_impl(t->a);
                    if (inner.indeterminate) return inner;
                    inner.class_map.insert(inner.class_map.begin(),
                                           desc("runs of adjacent blocks", "first block of each run"));
                    return inner;
                }
                CondensationResult res;
                res.quotient = t->a;
                res.class_map.push_back(desc("one class per block", "block basepoint"));
                for (auto& c : bq.class_map) res.class_map.push_back(std::move(c));
                return res;
            }
            if (!merge) {
                CondensationResult res;
                res.quotient = t_sum(t->a, bq.quotient);
                res.class_map = bq.class_map;
                res.class_map.push_back(desc("per-block classes, no boundary merges", "as in one block"));
                return res;
            }
            // boundary classes of consecutive blocks merge
            if (t->a->kind == Term::Kind::Ord) {
                std::uint64_t n = 0;
                if (t->a->ord.as_finite(n)) {
                    std::vector<TermPtr> blocks(n, t->b);
                    return fuse_concat(blocks, FiniteMode());
                }
                if (t->a->ord == CnfOrdinal::omega()) {
                    TermPtr mid = strip_first(strip_last(bq.quotient));
                    CondensationResult res;
                    res.quotient = t_lsum(
                        FinPoset::chain(2),
                        {t_nat(1), t_sum(t_omega(), t_lsum(FinPoset::chain(2), {mid, t_nat(1)}))});
                    res.class_map.push_back(desc(
                        "per-block classes; each block's last class merged with the next head",
                        "boundary representative in the earlier block"));
                    return res;
                }
            }
            return indeterminate(
                "boundary classes merge across an index with limit positions; "
                "not reducible to a term of the calculus");
        }
        case Term::Kind::SumList:
            return fuse_concat(live_blocks_in_order(t), FiniteMode());
        case Term::Kind::LimSum: {
            AttrReport rs = attrs(t->b);
            if (rs.card == CardClass::fin(1)) return condense_finite_impl(t->a);
            return identity_quotient(
                t, "every interval refills at the next stage, so no two points are finitely apart");
        }
        default:
            return indeterminate("unsupported shape");
    }
}

CondensationResult condense_h_impl(const TermPtr& t) {
    AttrReport r = attrs(t);
    if (r.card.is_zero()) {
        CondensationResult res;
        res.quotient = t_nat(0);
        return res;
    }
    if (r.scattered_omega) return point_quotient("the whole order is scattered");
    switch (t->kind) {
        case Term::Kind::Rats:
        case Term::Kind::QKappa:
            return identity_quotient(t, "every nondegenerate interval is dense");
        case Term::Kind::Inv: {
            CondensationResult inner = condense_h_impl(t->a);
            if (inner.indeterminate) return inner;
            CondensationResult res = inner;
            AttrReport q = attrs(inner.quotient);
            res.quotient = q.card.is_finite() && q.card.n <= 1 ? inner.quotient
                                                               : t_inv(inner.quotient);
            return res;
        }
        case Term::Kind::SumConst: {
            AttrReport rb = attrs(t->b);
            if (rb.scattered_omega) {
                CondensationResult inner = condense_h_impl(t->a);
                if (inner.indeterminate) return inner;
                inner.class_map.insert(inner.class_map.begin(),
                                       desc("whole blocks grouped by the index classes",
                                            "block of the index representative"));
                return inner;
            }
            CondensationResult bq = condense_h_impl(t->b);
            if (bq.indeterminate) return bq;
            AttrReport rq = attrs(bq.quotient);
            bool merge = rq.has_last.value_or(false) && rq.has_first.value_or(false) &&
                         attrs(t->a).has_adjacent_pair.value_or(false);
            if (!merge) {
                CondensationResult res;
                res.quotient = t_sum(t->a, bq.quotient);
                res.class_map = bq.class_map;
                res.class_map.push_back(
                    desc("per-block classes, boundaries separated by dense gaps", "as in one block"));
                return res;
            }
            if (t->a->kind == Term::Kind::Ord) {
                std::uint64_t n = 0;
                if (t->a->ord.as_finite(n)) {
                    std::vector<TermPtr> blocks(n, t->b);
                    return fuse_concat(blocks, HMode());
                }
                if (t->a->ord == CnfOrdinal::omega()) {
                    TermPtr mid = strip_first(strip_last(bq.quotient));
                    CondensationResult res;
                    res.quotient = t_lsum(
                        FinPoset::chain(2),
                        {t_nat(1), t_sum(t_omega(), t_lsum(FinPoset::chain(2), {mid, t_nat(1)}))});
                    res.class_map.push_back(desc(
                        "per-block classes; each block's top class merged with the next bottom class",
                        "boundary representative in the earlier block"));
                    return res;
                }
            }
            return indeterminate(
                "scattered boundary classes merge across an index with limit positions");
        }
        case Term::Kind::SumList:
            return fuse_concat(live_blocks_in_order(t), HMode());
        case Term::Kind::LimSum: {
            AttrReport rs = attrs(t->b);
            if (rs.card == CardClass::fin(1)) return condense_h_impl(t->a);
            return identity_quotient(t, "every interval refills densely at later stages");
        }
        default:
            return indeterminate("unsupported shape");
    }
}

bool contains_kappa(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::Kappa:
        case Term::Kind::QKappa: return true;
        case Term::Kind::Inv: return contains_kappa(t->a);
        case Term::Kind::SumConst:
        case Term::Kind::LimSum:
            return contains_kappa(t->a) || contains_kappa(t->b);
        case Term::Kind::SumList: {
            for (const auto& f : t->family)
                if (contains_kappa(f)) return true;
            return false;
        }
        default: return false;
    }
}

CnfOrdinal rank_rec(const TermPtr& t) {
    AttrReport r = attrs(t);
    if (r.card.is_finite()) return CnfOrdinal();
    switch (t->kind) {
        case Term::Kind::Ord:
            return t->ord.terms().front().exp; // leading exponent
        case Term::Kind::Rats:
        case Term::Kind::QKappa:
            throw DomainError("rank undefined for non-scattered terms");
        case Term::Kind::Inv:
            return rank_rec(t->a);
        case Term::Kind::SumConst:
            return std_add(rank_rec(t->b), rank_rec(t->a));
        case Term::Kind::SumList: {
            CnfOrdinal m;
            for (const auto& f : t->family)
                if (!term_is_empty(f)) m = ord_max(m, rank_rec(f));
            return m;
        }
        case Term::Kind::LimSum: {
            AttrReport rs = attrs(t->b);
            if (rs.card == CardClass::fin(1)) return rank_rec(t->a);
            throw DomainError("rank undefined for non-scattered terms");
        }
        default:
            throw DomainError("rank undefined for term " + t->str());
    }
}

} // namespace

CondensationResult condense_finite(const TermPtr& t) {
    require_linear(t, "condense_finite");
    return condense_finite_impl(t);
}

CondensationResult condense_h(const TermPtr& t) {
    require_linear(t, "condense_h");
    return condense_h_impl(t);
}

CnfOrdinal hausdorff_rank(const TermPtr& t) {
    require_linear(t, "hausdorff_rank");
    AttrReport r = attrs(t);
    if (!r.scattered_omega)
        throw DomainError("hausdorff_rank requires a scattered term (iteration would not "
                          "terminate at a point)");
    if (contains_kappa(t))
        throw DomainError("hausdorff_rank of a kappa-sized order exceeds the ordinal domain");
    return rank_rec(t);
}

namespace {
std::atomic<int> g_iter_cap{16};
} // namespace

void set_condense_iteration_cap(int cap) { g_iter_cap.store(cap); }
int condense_iteration_cap() { return g_iter_cap.load(); }

int condense_iterations(const TermPtr& t, int cap) {
    if (cap == 0) cap = condense_iteration_cap();
    TermPtr cur = t;
    for (int i = 0; i < cap; ++i) {
        if (attrs(cur).card.is_finite()) return i;
        CondensationResult step = condense_finite(cur);
        if (step.indeterminate)
            throw DomainError("literal condensation hit an unsupported shape: " + step.note);
        cur = step.quotient;
    }
    throw DomainError("condensation iteration cap reached");
}

} // namespace ordcalc
