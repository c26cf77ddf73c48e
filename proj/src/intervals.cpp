#include "ordcalc/intervals.hpp"

#include "ordcalc/error.hpp"

namespace ordcalc {

namespace {

Address tail_of(const Address& a, std::size_t from) {
    Address r;
    r.path.assign(a.path.begin() + static_cast<std::ptrdiff_t>(from), a.path.end());
    return r;
}

// number of ordinals strictly between x and y (x < y), as a class
CardClass ord_interval_card(const CnfOrdinal& x, const CnfOrdinal& y) {
    // finite distance iff y < x + w, i.e. x and y differ only in the finite part
    if (y < std_add(x, CnfOrdinal::omega())) {
        std::uint64_t fx = 0, fy = 0;
        if (!x.terms().empty() && x.terms().back().exp.is_zero()) fx = x.terms().back().coeff;
        if (!y.terms().empty() && y.terms().back().exp.is_zero()) fy = y.terms().back().coeff;
        std::uint64_t d = fy > fx ? fy - fx : 0;
        return CardClass::fin(d > 0 ? d - 1 : 0);
    }
    return CardClass::aleph0();
}

CardClass ord_below_card(const CnfOrdinal& x) {
    std::uint64_t n = 0;
    if (x.as_finite(n)) return CardClass::fin(n);
    return CardClass::aleph0();
}

CardClass ord_above_card(const CnfOrdinal& bound, const CnfOrdinal& x) {
    if (bound < std_add(x, CnfOrdinal::omega())) {
        // finitely many ordinals in [x+1, bound)
        std::uint64_t fx = 0, fb = 0;
        if (!x.terms().empty() && x.terms().back().exp.is_zero()) fx = x.terms().back().coeff;
        if (!bound.terms().empty() && bound.terms().back().exp.is_zero())
            fb = bound.terms().back().coeff;
        std::uint64_t d = fb > fx ? fb - fx : 0;
        return CardClass::fin(d > 0 ? d - 1 : 0);
    }
    return CardClass::aleph0();
}

enum class Dir { Below, Above };

CardClass side_card(const TermPtr& t, const Address& a, std::size_t i, Dir dir) {
    switch (t->kind) {
        case Term::Kind::Inv:
            return side_card(t->a, a, i, dir == Dir::Below ? Dir::Above : Dir::Below);
        case Term::Kind::Ord: {
            const auto& v = std::get<AddrStep::LeafOrd>(a.path[i].step).v;
            return dir == Dir::Below ? ord_below_card(v) : ord_above_card(t->ord, v);
        }
        case Term::Kind::Kappa: {
            const auto& v = std::get<AddrStep::LeafOrd>(a.path[i].step).v;
            return dir == Dir::Below ? ord_below_card(v) : CardClass::kappa();
        }
        case Term::Kind::Rats:
            return CardClass::aleph0();
        case Term::Kind::QKappa:
            return CardClass::kappa();
        case Term::Kind::Fin: {
            auto v = std::get<AddrStep::LeafInt>(a.path[i].step).v;
            std::uint64_t c = 0;
            for (int j = 0; j < t->poset.size(); ++j)
                if (dir == Dir::Below ? t->poset.lt(j, static_cast<int>(v))
                                      : t->poset.lt(static_cast<int>(v), j))
                    ++c;
            return CardClass::fin(c);
        }
        case Term::Kind::Ac:
        case Term::Kind::AcOmega:
            return CardClass::fin(0);
        case Term::Kind::SumConst: {
            const auto& bl = std::get<AddrStep::Block>(a.path[i].step);
            CardClass within = side_card(t->b, a, i + 1, dir);
            CardClass idx_side = side_card(t->a, *bl.index, 0, dir);
            return card_add(within, card_mul(idx_side, attrs(t->b).card));
        }
        case Term::Kind::SumList: {
            const auto& bl = std::get<AddrStep::Block>(a.path[i].step);
            auto bno = std::get<AddrStep::LeafInt>(bl.index->path[0].step).v;
            CardClass acc = side_card(t->family[static_cast<std::size_t>(bno)], a, i + 1, dir);
            for (int j = 0; j < t->poset.size(); ++j) {
                bool rel = dir == Dir::Below ? t->poset.lt(j, static_cast<int>(bno))
                                             : t->poset.lt(static_cast<int>(bno), j);
                if (rel) acc = card_add(acc, attrs(t->family[static_cast<std::size_t>(j)]).card);
            }
            return acc;
        }
        case Term::Kind::LimSum: {
            int n = std::get<AddrStep::Stage>(a.path[i].step).n;
            TermPtr stage = limsum_stage(t, n);
            Address rest = tail_of(a, i + 1);
            CardClass at_stage = side_card(stage, rest, 0, dir);
            CardClass step_card = attrs(t->b).card;
            if (step_card == CardClass::fin(1)) return at_stage; // the limit is the base
            CardClass step_side = dir == Dir::Below ? below_card(t->b, t->basepoint)
                                                    : above_card(t->b, t->basepoint);
            // every later stage adds step_side fresh points beside the element
            // and multiplies the elements already on this side by the step
            CardClass growth = step_side;
            if (!at_stage.is_zero()) growth = card_sup(growth, step_card);
            if (growth.is_zero()) return at_stage;
            return card_sup(card_sup(at_stage, growth), CardClass::aleph0());
        }
    }
    return CardClass::fin(0);
}

CardClass ival_card(const TermPtr& t, const Address& a, std::size_t ia, const Address& b,
                    std::size_t ib);

bool scat_side(const TermPtr& t, const Address& a, std::size_t i, Dir dir);

bool ival_scattered(const TermPtr& t, const Address& a, std::size_t ia, const Address& b,
                    std::size_t ib);

CardClass ival_card(const TermPtr& t, const Address& a, std::size_t ia, const Address& b,
                    std::size_t ib) {
    switch (t->kind) {
        case Term::Kind::Inv:
            return ival_card(t->a, b, ib, a, ia);
        case Term::Kind::Ord:
        case Term::Kind::Kappa:
            return ord_interval_card(std::get<AddrStep::LeafOrd>(a.path[ia].step).v,
                                     std::get<AddrStep::LeafOrd>(b.path[ib].step).v);
        case Term::Kind::Rats:
            return CardClass::aleph0();
        case Term::Kind::QKappa:
            return CardClass::kappa();
        case Term::Kind::Fin: {
            auto x = std::get<AddrStep::LeafInt>(a.path[ia].step).v;
            auto y = std::get<AddrStep::LeafInt>(b.path[ib].step).v;
            return CardClass::fin(interval(t->poset, static_cast<int>(x), static_cast<int>(y)).size());
        }
        case Term::Kind::Ac:
        case Term::Kind::AcOmega:
            return CardClass::fin(0);
        case Term::Kind::SumConst: {
            const auto& ba = std::get<AddrStep::Block>(a.path[ia].step);
            const auto& bb = std::get<AddrStep::Block>(b.path[ib].step);
            Cmp c = compare(t->a, *ba.index, *bb.index);
            if (c == Cmp::Equal) return ival_card(t->b, a, ia + 1, b, ib + 1);
            CardClass above_a = side_card(t->b, a, ia + 1, Dir::Above);
            CardClass below_b = side_card(t->b, b, ib + 1, Dir::Below);
            CardClass middle = card_mul(ival_card(t->a, *ba.index, 0, *bb.index, 0),
                                        attrs(t->b).card);
            return card_add(card_add(above_a, below_b), middle);
        }
        case Term::Kind::SumList: {
            const auto& ba = std::get<AddrStep::Block>(a.path[ia].step);
            const auto& bb = std::get<AddrStep::Block>(b.path[ib].step);
            auto x = std::get<AddrStep::LeafInt>(ba.index->path[0].step).v;
            auto y = std::get<AddrStep::LeafInt>(bb.index->path[0].step).v;
            if (x == y)
                return ival_card(t->family[static_cast<std::size_t>(x)], a, ia + 1, b, ib + 1);
            CardClass acc = card_add(
                side_card(t->family[static_cast<std::size_t>(x)], a, ia + 1, Dir::Above),
                side_card(t->family[static_cast<std::size_t>(y)], b, ib + 1, Dir::Below));
            for (int j = 0; j < t->poset.size(); ++j)
                if (t->poset.lt(static_cast<int>(x), j) && t->poset.lt(j, static_cast<int>(y)))
                    acc = card_add(acc, attrs(t->family[static_cast<std::size_t>(j)]).card);
            return acc;
        }
        case Term::Kind::LimSum: {
            int na = std::get<AddrStep::Stage>(a.path[ia].step).n;
            int nb = std::get<AddrStep::Stage>(b.path[ib].step).n;
            int m = std::max(na, nb);
            Address ra = tail_of(a, ia + 1);
            Address rb = tail_of(b, ib + 1);
            for (int k = na; k < m; ++k) {
                Address lifted;
                lifted.path.push_back(AddrStep{AddrStep::Block{std::make_shared<Address>(std::move(ra))}});
                for (const auto& s : t->basepoint.path) lifted.path.push_back(s);
                ra = std::move(lifted);
            }
            for (int k = nb; k < m; ++k) {
                Address lifted;
                lifted.path.push_back(AddrStep{AddrStep::Block{std::make_shared<Address>(std::move(rb))}});
                for (const auto& s : t->basepoint.path) lifted.path.push_back(s);
                rb = std::move(lifted);
            }
            TermPtr stage = limsum_stage(t, m);
            CardClass at_stage = ival_card(stage, ra, 0, rb, 0);
            CardClass step_card = attrs(t->b).card;
            if (step_card == CardClass::fin(1)) return at_stage; // the limit is the base
            // each later stage inserts fresh step copies beside the interval
            // boundary and multiplies the interior by the step
            CardClass fill = card_add(below_card(t->b, t->basepoint),
                                      above_card(t->b, t->basepoint));
            CardClass growth = fill;
            if (!at_stage.is_zero()) growth = card_sup(growth, step_card);
            if (growth.is_zero()) return at_stage;
            return card_sup(card_sup(at_stage, growth), CardClass::aleph0());
        }
    }
    return CardClass::fin(0);
}

bool scat_side(const TermPtr& t, const Address& a, std::size_t i, Dir dir) {
    switch (t->kind) {
        case Term::Kind::Inv:
            return scat_side(t->a, a, i, dir == Dir::Below ? Dir::Above : Dir::Below);
        case Term::Kind::Ord:
        case Term::Kind::Kappa:
        case Term::Kind::Fin:
        case Term::Kind::Ac:
        case Term::Kind::AcOmega:
            return true;
        case Term::Kind::Rats:
        case Term::Kind::QKappa:
            return false; // both sides of a point contain a dense suborder
        case Term::Kind::SumConst: {
            const auto& bl = std::get<AddrStep::Block>(a.path[i].step);
            if (!scat_side(t->b, a, i + 1, dir)) return false;
            CardClass idx_side = side_card(t->a, *bl.index, 0, dir);
            if (idx_side.is_zero()) return true;
            return scat_side(t->a, *bl.index, 0, dir) && attrs(t->b).scattered_omega;
        }
        case Term::Kind::SumList: {
            const auto& bl = std::get<AddrStep::Block>(a.path[i].step);
            auto bno = std::get<AddrStep::LeafInt>(bl.index->path[0].step).v;
            if (!scat_side(t->family[static_cast<std::size_t>(bno)], a, i + 1, dir)) return false;
            for (int j = 0; j < t->poset.size(); ++j) {
                bool rel = dir == Dir::Below ? t->poset.lt(j, static_cast<int>(bno))
                                             : t->poset.lt(static_cast<int>(bno), j);
                if (rel && !attrs(t->family[static_cast<std::size_t>(j)]).scattered_omega)
                    return false;
            }
            return true;
        }
        case Term::Kind::LimSum: {
            AttrReport rs = attrs(t->b);
            if (rs.card == CardClass::fin(1)) {
                int n = std::get<AddrStep::Stage>(a.path[i].step).n;
                TermPtr stage = limsum_stage(t, n);
                Address rest = tail_of(a, i + 1);
                return scat_side(stage, rest, 0, dir);
            }
            // a growing side gets a fresh in-between fill at every stage
            CardClass side = side_card(t, a, i, dir);
            if (side.is_zero()) return true;
            bool below_bp = exists_below(t->b, t->basepoint);
            bool above_bp = exists_above(t->b, t->basepoint);
            if (below_bp || above_bp) return false;
            return scat_side(limsum_stage(t, std::get<AddrStep::Stage>(a.path[i].step).n),
                             tail_of(a, i + 1), 0, dir) &&
                   rs.scattered_omega;
        }
    }
    return true;
}

bool ival_scattered(const TermPtr& t, const Address& a, std::size_t ia, const Address& b,
                    std::size_t ib) {
    switch (t->kind) {
        case Term::Kind::Inv:
            return ival_scattered(t->a, b, ib, a, ia);
        case Term::Kind::Ord:
        case Term::Kind::Kappa:
        case Term::Kind::Fin:
        case Term::Kind::Ac:
        case Term::Kind::AcOmega:
            return true;
        case Term::Kind::Rats:
        case Term::Kind::QKappa:
            return false; // any nondegenerate interval is dense
        case Term::Kind::SumConst: {
            const auto& ba = std::get<AddrStep::Block>(a.path[ia].step);
            const auto& bb = std::get<AddrStep::Block>(b.path[ib].step);
            Cmp c = compare(t->a, *ba.index, *bb.index);
            if (c == Cmp::Equal) return ival_scattered(t->b, a, ia + 1, b, ib + 1);
            if (!scat_side(t->b, a, ia + 1, Dir::Above)) return false;
            if (!scat_side(t->b, b, ib + 1, Dir::Below)) return false;
            CardClass mid = ival_card(t->a, *ba.index, 0, *bb.index, 0);
            if (mid.is_zero()) return true;
            return ival_scattered(t->a, *ba.index, 0, *bb.index, 0) &&
                   attrs(t->b).scattered_omega;
        }
        case Term::Kind::SumList: {
            const auto& ba = std::get<AddrStep::Block>(a.path[ia].step);
            const auto& bb = std::get<AddrStep::Block>(b.path[ib].step);
            auto x = std::get<AddrStep::LeafInt>(ba.index->path[0].step).v;
            auto y = std::get<AddrStep::LeafInt>(bb.index->path[0].step).v;
            if (x == y)
                return ival_scattered(t->family[static_cast<std::size_t>(x)], a, ia + 1, b, ib + 1);
            if (!scat_side(t->family[static_cast<std::size_t>(x)], a, ia + 1, Dir::Above))
                return false;
            if (!scat_side(t->family[static_cast<std::size_t>(y)], b, ib + 1, Dir::Below))
                return false;
            for (int j = 0; j < t->poset.size(); ++j)
                if (t->poset.lt(static_cast<int>(x), j) && t->poset.lt(j, static_cast<int>(y)) &&
                    !attrs(t->family[static_cast<std::size_t>(j)]).scattered_omega)
                    return false;
            return true;
        }
        case Term::Kind::LimSum: {
            AttrReport rs = attrs(t->b);
            bool below_bp = exists_below(t->b, t->basepoint);
            bool above_bp = exists_above(t->b, t->basepoint);
            if (below_bp || above_bp) return false; // every interval refills densely
            int na = std::get<AddrStep::Stage>(a.path[ia].step).n;
            int nb = std::get<AddrStep::Stage>(b.path[ib].step).n;
            int m = std::max(na, nb);
            Address ra = tail_of(a, ia + 1);
            Address rb = tail_of(b, ib + 1);
            for (int k = na; k < m; ++k) {
                Address lifted;
                lifted.path.push_back(AddrStep{AddrStep::Block{std::make_shared<Address>(std::move(ra))}});
                for (const auto& s : t->basepoint.path) lifted.path.push_back(s);
                ra = std::move(lifted);
            }
            for (int k = nb; k < m; ++k) {
                Address lifted;
                lifted.path.push_back(AddrStep{AddrStep::Block{std::make_shared<Address>(std::move(rb))}});
                for (const auto& s : t->basepoint.path) lifted.path.push_back(s);
                rb = std::move(lifted);
            }
            return ival_scattered(limsum_stage(t, m), ra, 0, rb, 0) && rs.scattered_omega;
        }
    }
    return true;
}

} // namespace

CardClass below_card(const TermPtr& t, const Address& a) { return side_card(t, a, 0, Dir::Below); }
CardClass above_card(const TermPtr& t, const Address& a) { return side_card(t, a, 0, Dir::Above); }

CardClass interval_card(const TermPtr& t, const Address& a, const Address& b) {
    if (compare(t, a, b) != Cmp::Less) throw DomainError("interval_card requires a < b");
    return ival_card(t, a, 0, b, 0);
}

bool scattered_above(const TermPtr& t, const Address& a) { return scat_side(t, a, 0, Dir::Above); }
bool scattered_below(const TermPtr& t, const Address& a) { return scat_side(t, a, 0, Dir::Below); }

bool interval_scattered(const TermPtr& t, const Address& a, const Address& b) {
    if (compare(t, a, b) != Cmp::Less) throw DomainError("interval_scattered requires a < b");
    return ival_scattered(t, a, 0, b, 0);
}

bool same_class_finite(const TermPtr& t, const Address& a, const Address& b) {
    Cmp c = compare(t, a, b);
    if (c == Cmp::Equal) return true;
    if (c == Cmp::Incomparable) return false;
    const Address& lo = c == Cmp::Less ? a : b;
    const Address& hi = c == Cmp::Less ? b : a;
    return ival_card(t, lo, 0, hi, 0).is_finite();
}

bool same_class_scattered(const TermPtr& t, const Address& a, const Address& b) {
    Cmp c = compare(t, a, b);
    if (c == Cmp::Equal) return true;
    if (c == Cmp::Incomparable) return false;
    const Address& lo = c == Cmp::Less ? a : b;
    const Address& hi = c == Cmp::Less ? b : a;
    return ival_scattered(t, lo, 0, hi, 0);
}

} // namespace ordcalc
