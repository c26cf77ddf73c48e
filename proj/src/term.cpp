#include "ordcalc/term.hpp"

#include <algorithm>

#include "ordcalc/error.hpp"

namespace ordcalc {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

std::uint64_t hash_ord(const CnfOrdinal& o) {
    std::uint64_t h = 0xabcdef12u;
    for (const auto& t : o.terms()) {
        h = mix(h, hash_ord(t.exp));
        h = mix(h, t.coeff);
    }
    return h;
}

std::uint64_t hash_addr(const Address& a) {
    std::uint64_t h = 0x5151u;
    for (const auto& s : a.path) {
        h = mix(h, static_cast<std::uint64_t>(s.step.index()));
        if (auto* li = std::get_if<AddrStep::LeafInt>(&s.step))
            h = mix(h, static_cast<std::uint64_t>(li->v));
        else if (auto* lo = std::get_if<AddrStep::LeafOrd>(&s.step))
            h = mix(h, hash_ord(lo->v));
        else if (auto* lr = std::get_if<AddrStep::LeafRat>(&s.step)) {
            h = mix(h, static_cast<std::uint64_t>(lr->v.num));
            h = mix(h, static_cast<std::uint64_t>(lr->v.den));
        } else if (auto* bl = std::get_if<AddrStep::Block>(&s.step))
            h = mix(h, hash_addr(*bl->index));
        else if (auto* st = std::get_if<AddrStep::Stage>(&s.step))
            h = mix(h, static_cast<std::uint64_t>(st->n));
    }
    return h;
}

std::uint64_t hash_poset(const FinPoset& p) {
    std::uint64_t h = mix(0x90f0u, static_cast<std::uint64_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) h = mix(h, p.row(i));
    return h;
}

TermPtr make(Term t) {
    std::uint64_t h = mix(0x7777u, static_cast<std::uint64_t>(t.kind));
    switch (t.kind) {
        case Term::Kind::Fin: h = mix(h, hash_poset(t.poset)); break;
        case Term::Kind::Ord: h = mix(h, hash_ord(t.ord)); break;
        case Term::Kind::Ac: h = mix(h, t.ac_n); break;
        case Term::Kind::Inv: h = mix(h, t.a->hash); break;
        case Term::Kind::SumConst:
            h = mix(h, t.a->hash);
            h = mix(h, t.b->hash);
            break;
        case Term::Kind::SumList:
            h = mix(h, hash_poset(t.poset));
            for (const auto& f : t.family) h = mix(h, f->hash);
            break;
        case Term::Kind::LimSum:
            h = mix(h, t.a->hash);
            h = mix(h, t.b->hash);
            h = mix(h, hash_addr(t.basepoint));
            break;
        default: break;
    }
    t.hash = h;
    return std::make_shared<const Term>(std::move(t));
}

} // namespace

bool term_eq(const TermPtr& x, const TermPtr& y) {
    if (x.get() == y.get()) return true;
    if (x->kind != y->kind || x->hash != y->hash) return false;
    switch (x->kind) {
        case Term::Kind::Fin: return x->poset == y->poset;
        case Term::Kind::Ord: return x->ord == y->ord;
        case Term::Kind::Kappa:
        case Term::Kind::Rats:
        case Term::Kind::QKappa:
        case Term::Kind::AcOmega: return true;
        case Term::Kind::Ac: return x->ac_n == y->ac_n;
        case Term::Kind::Inv: return term_eq(x->a, y->a);
        case Term::Kind::SumConst: return term_eq(x->a, y->a) && term_eq(x->b, y->b);
        case Term::Kind::SumList: {
            if (!(x->poset == y->poset) || x->family.size() != y->family.size()) return false;
            for (std::size_t i = 0; i < x->family.size(); ++i)
                if (!term_eq(x->family[i], y->family[i])) return false;
            return true;
        }
        case Term::Kind::LimSum:
            return term_eq(x->a, y->a) && term_eq(x->b, y->b) && x->basepoint == y->basepoint;
    }
    return false;
}

TermPtr t_ord(const CnfOrdinal& o) {
    Term t;
    t.kind = Term::Kind::Ord;
    t.ord = o;
    return make(std::move(t));
}

TermPtr t_nat(std::uint64_t n) { return t_ord(CnfOrdinal::finite(n)); }
TermPtr t_omega() { return t_ord(CnfOrdinal::omega()); }
TermPtr t_omega_star() { return t_inv(t_omega()); }

TermPtr t_kappa() {
    Term t;
    t.kind = Term::Kind::Kappa;
    return make(std::move(t));
}

TermPtr t_kappa_star() { return t_inv(t_kappa()); }

TermPtr t_rats() {
    Term t;
    t.kind = Term::Kind::Rats;
    return make(std::move(t));
}

TermPtr t_qkappa() {
    Term t;
    t.kind = Term::Kind::QKappa;
    return make(std::move(t));
}

TermPtr t_ac(std::uint64_t n) {
    if (n == 0) throw ValidationError("ac(n) requires n >= 1");
    if (n == 1) return t_nat(1);
    Term t;
    t.kind = Term::Kind::Ac;
    t.ac_n = n;
    return make(std::move(t));
}

TermPtr t_ac_omega() {
    Term t;
    t.kind = Term::Kind::AcOmega;
    return make(std::move(t));
}

TermPtr t_fin(const FinPoset& p) {
    if (p.is_linear()) return t_nat(static_cast<std::uint64_t>(p.size()));
    Term t;
    t.kind = Term::Kind::Fin;
    t.poset = p;
    return make(std::move(t));
}

TermPtr t_inv(TermPtr x) {
    Term t;
    t.kind = Term::Kind::Inv;
    t.a = std::move(x);
    return make(std::move(t));
}

TermPtr t_sum(TermPtr index, TermPtr summand) {
    Term t;
    t.kind = Term::Kind::SumConst;
    t.a = std::move(index);
    t.b = std::move(summand);
    return make(std::move(t));
}

TermPtr t_lsum(const FinPoset& index, std::vector<TermPtr> family) {
    if (static_cast<int>(family.size()) != index.size())
        throw ValidationError("lsum family length must equal index size");
    Term t;
    t.kind = Term::Kind::SumList;
    t.poset = index;
    t.family = std::move(family);
    return make(std::move(t));
}

TermPtr t_limsum(TermPtr base, TermPtr step, const Address& basepoint) {
    if (term_is_empty(step)) throw ValidationError("limsum step must be nonempty");
    if (!valid_address(step, basepoint))
        throw ValidationError("limsum basepoint is not a valid address of the step term");
    Term t;
    t.kind = Term::Kind::LimSum;
    t.a = std::move(base);
    t.b = std::move(step);
    t.basepoint = basepoint;
    return make(std::move(t));
}

TermPtr t_limsum(TermPtr base, TermPtr step) {
    Address bp = canonical_address(step);
    return t_limsum(std::move(base), std::move(step), bp);
}

Address canonical_address(const TermPtr& t) {
    if (term_is_empty(t)) throw ValidationError("empty term has no canonical address");
    Address a;
    const Term* cur = t.get();
    for (;;) {
        switch (cur->kind) {
            case Term::Kind::Fin:
            case Term::Kind::Ac:
            case Term::Kind::AcOmega:
                a.path.push_back(AddrStep{AddrStep::LeafInt{0}});
                return a;
            case Term::Kind::Ord:
            case Term::Kind::Kappa:
                a.path.push_back(AddrStep{AddrStep::LeafOrd{CnfOrdinal()}});
                return a;
            case Term::Kind::Rats:
            case Term::Kind::QKappa:
                a.path.push_back(AddrStep{AddrStep::LeafRat{Rational{0, 1}}});
                return a;
            case Term::Kind::Inv:
                cur = cur->a.get();
                break;
            case Term::Kind::SumConst: {
                Address idx = canonical_address(cur->a);
                a.path.push_back(AddrStep{AddrStep::Block{std::make_shared<Address>(std::move(idx))}});
                cur = cur->b.get();
                break;
            }
            case Term::Kind::SumList: {
                // first nonempty block
                for (std::size_t i = 0; i < cur->family.size(); ++i) {
                    if (term_is_empty(cur->family[i])) continue;
                    Address idx;
                    idx.path.push_back(AddrStep{AddrStep::LeafInt{static_cast<std::int64_t>(i)}});
                    a.path.push_back(
                        AddrStep{AddrStep::Block{std::make_shared<Address>(std::move(idx))}});
                    cur = cur->family[i].get();
                    goto next;
                }
                throw ValidationError("empty term has no canonical address");
            next:
                break;
            }
            case Term::Kind::LimSum:
                a.path.push_back(AddrStep{AddrStep::Stage{0}});
                cur = cur->a.get();
                break;
        }
    }
}

TermPtr limsum_stage(const TermPtr& limsum, int n) {
    if (limsum->kind != Term::Kind::LimSum) throw ValidationError("not a direct-limit term");
    TermPtr stage = limsum->a;
    for (int i = 0; i < n; ++i) stage = t_sum(stage, limsum->b);
    return stage;
}

bool valid_address(const TermPtr& t, const Address& a) {
    const Term* cur = t.get();
    TermPtr hold = t;
    std::size_t i = 0;
    for (;;) {
        if (cur->kind == Term::Kind::Inv) {
            hold = cur->a;
            cur = hold.get();
            continue;
        }
        if (i >= a.path.size()) return false;
        const auto& st = a.path[i].step;
        switch (cur->kind) {
            case Term::Kind::Fin: {
                auto* li = std::get_if<AddrStep::LeafInt>(&st);
                return li && i + 1 == a.path.size() && li->v >= 0 && li->v < cur->poset.size();
            }
            case Term::Kind::Ac: {
                auto* li = std::get_if<AddrStep::LeafInt>(&st);
                return li && i + 1 == a.path.size() && li->v >= 0 &&
                       li->v < static_cast<std::int64_t>(cur->ac_n);
            }
            case Term::Kind::AcOmega: {
                auto* li = std::get_if<AddrStep::LeafInt>(&st);
                return li && i + 1 == a.path.size() && li->v >= 0;
            }
            case Term::Kind::Ord: {
                auto* lo = std::get_if<AddrStep::LeafOrd>(&st);
                return lo && i + 1 == a.path.size() && lo->v < cur->ord;
            }
            case Term::Kind::Kappa: {
                auto* lo = std::get_if<AddrStep::LeafOrd>(&st);
                return lo && i + 1 == a.path.size();
            }
            case Term::Kind::Rats:
            case Term::Kind::QKappa: {
                auto* lr = std::get_if<AddrStep::LeafRat>(&st);
                return lr && i + 1 == a.path.size();
            }
            case Term::Kind::SumConst: {
                auto* bl = std::get_if<AddrStep::Block>(&st);
                if (!bl || !valid_address(cur->a, *bl->index)) return false;
                hold = cur->b;
                cur = hold.get();
                ++i;
                break;
            }
            case Term::Kind::SumList: {
                auto* bl = std::get_if<AddrStep::Block>(&st);
                if (!bl || bl->index->path.size() != 1) return false;
                auto* li = std::get_if<AddrStep::LeafInt>(&bl->index->path[0].step);
                if (!li || li->v < 0 || li->v >= cur->poset.size()) return false;
                hold = cur->family[static_cast<std::size_t>(li->v)];
                cur = hold.get();
                ++i;
                break;
            }
            case Term::Kind::LimSum: {
                auto* sg = std::get_if<AddrStep::Stage>(&st);
                if (!sg || sg->n < 0) return false;
                TermPtr stage = cur->a;
                for (int k = 0; k < sg->n; ++k) stage = t_sum(stage, cur->b);
                Address rest;
                rest.path.assign(a.path.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                 a.path.end());
                return valid_address(stage, rest);
            }
            case Term::Kind::Inv: break; // handled above
        }
    }
}

namespace {

bool exists_dir(const TermPtr& t, const Address& a, std::size_t i, bool below);

bool exists_dir_rest(const TermPtr& t, const Address& a, std::size_t i, bool below) {
    return exists_dir(t, a, i, below);
}

bool exists_dir(const TermPtr& t, const Address& a, std::size_t i, bool below) {
    const Term* cur = t.get();
    switch (cur->kind) {
        case Term::Kind::Inv: {
            return exists_dir(cur->a, a, i, !below);
        }
        case Term::Kind::Fin: {
            auto v = std::get<AddrStep::LeafInt>(a.path[i].step).v;
            for (int j = 0; j < cur->poset.size(); ++j)
                if (below ? cur->poset.lt(j, static_cast<int>(v))
                          : cur->poset.lt(static_cast<int>(v), j))
                    return true;
            return false;
        }
        case Term::Kind::Ac:
        case Term::Kind::AcOmega:
            return false;
        case Term::Kind::Ord: {
            const auto& v = std::get<AddrStep::LeafOrd>(a.path[i].step).v;
            if (below) return !v.is_zero();
            return std_add(v, CnfOrdinal::finite(1)) < cur->ord;
        }
        case Term::Kind::Kappa: {
            const auto& v = std::get<AddrStep::LeafOrd>(a.path[i].step).v;
            if (below) return !v.is_zero();
            return true; // kappa has no last element
        }
        case Term::Kind::Rats:
        case Term::Kind::QKappa:
            return true;
        case Term::Kind::SumConst: {
            const auto& bl = std::get<AddrStep::Block>(a.path[i].step);
            if (exists_dir_rest(cur->b, a, i + 1, below)) return true;
            Address idx = *bl.index;
            return below ? exists_below(cur->a, idx) : exists_above(cur->a, idx);
        }
        case Term::Kind::SumList: {
            const auto& bl = std::get<AddrStep::Block>(a.path[i].step);
            auto bno = std::get<AddrStep::LeafInt>(bl.index->path[0].step).v;
            if (exists_dir_rest(cur->family[static_cast<std::size_t>(bno)], a, i + 1, below))
                return true;
            for (int j = 0; j < cur->poset.size(); ++j) {
                bool rel = below ? cur->poset.lt(j, static_cast<int>(bno))
                                 : cur->poset.lt(static_cast<int>(bno), j);
                if (rel && !term_is_empty(cur->family[static_cast<std::size_t>(j)])) return true;
            }
            return false;
        }
        case Term::Kind::LimSum: {
            int n = std::get<AddrStep::Stage>(a.path[i].step).n;
            TermPtr stage = cur->a;
            for (int k = 0; k < n; ++k) stage = t_sum(stage, cur->b);
            Address rest;
            rest.path.assign(a.path.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.path.end());
            if (below ? exists_below(stage, rest) : exists_above(stage, rest)) return true;
            return below ? exists_below(cur->b, cur->basepoint)
                         : exists_above(cur->b, cur->basepoint);
        }
    }
    return false;
}

} // namespace

bool exists_below(const TermPtr& t, const Address& a) { return exists_dir(t, a, 0, true); }
bool exists_above(const TermPtr& t, const Address& a) { return exists_dir(t, a, 0, false); }

namespace {

Address witness_dir(const TermPtr& t, const Address& a, std::size_t i, bool below) {
    switch (t->kind) {
        case Term::Kind::Inv: {
            return witness_dir(t->a, a, i, !below);
        }
        case Term::Kind::Fin: {
            auto v = std::get<AddrStep::LeafInt>(a.path[i].step).v;
            for (int j = 0; j < t->poset.size(); ++j)
                if (below ? t->poset.lt(j, static_cast<int>(v))
                          : t->poset.lt(static_cast<int>(v), j)) {
                    Address w;
                    w.path.push_back(AddrStep{AddrStep::LeafInt{j}});
                    return w;
                }
            break;
        }
        case Term::Kind::Ord:
        case Term::Kind::Kappa: {
            const auto& v = std::get<AddrStep::LeafOrd>(a.path[i].step).v;
            Address w;
            if (below)
                w.path.push_back(AddrStep{AddrStep::LeafOrd{CnfOrdinal()}});
            else
                w.path.push_back(AddrStep{AddrStep::LeafOrd{std_add(v, CnfOrdinal::finite(1))}});
            return w;
        }
        case Term::Kind::Rats:
        case Term::Kind::QKappa: {
            const auto& v = std::get<AddrStep::LeafRat>(a.path[i].step).v;
            Address w;
            w.path.push_back(AddrStep{AddrStep::LeafRat{
                Rational::make(below ? v.num - v.den : v.num + v.den, v.den)}});
            return w;
        }
        case Term::Kind::SumConst: {
            const auto& bl = std::get<AddrStep::Block>(a.path[i].step);
            if (exists_dir(t->b, a, i + 1, below)) {
                Address w;
                w.path.push_back(AddrStep{AddrStep::Block{bl.index}});
                Address rest = witness_dir(t->b, a, i + 1, below);
                for (auto& s : rest.path) w.path.push_back(std::move(s));
                return w;
            }
            Address idx = below ? witness_below(t->a, *bl.index) : witness_above(t->a, *bl.index);
            Address w;
            w.path.push_back(AddrStep{AddrStep::Block{std::make_shared<Address>(std::move(idx))}});
            Address rest = canonical_address(t->b);
            for (auto& s : rest.path) w.path.push_back(std::move(s));
            return w;
        }
        case Term::Kind::SumList: {
            const auto& bl = std::get<AddrStep::Block>(a.path[i].step);
            auto bno = std::get<AddrStep::LeafInt>(bl.index->path[0].step).v;
            if (exists_dir(t->family[static_cast<std::size_t>(bno)], a, i + 1, below)) {
                Address w;
                w.path.push_back(AddrStep{AddrStep::Block{bl.index}});
                Address rest =
                    witness_dir(t->family[static_cast<std::size_t>(bno)], a, i + 1, below);
                for (auto& s : rest.path) w.path.push_back(std::move(s));
                return w;
            }
            for (int j = 0; j < t->poset.size(); ++j) {
                bool rel = below ? t->poset.lt(j, static_cast<int>(bno))
                                 : t->poset.lt(static_cast<int>(bno), j);
                if (rel && !term_is_empty(t->family[static_cast<std::size_t>(j)])) {
                    Address idx;
                    idx.path.push_back(AddrStep{AddrStep::LeafInt{j}});
                    Address w;
                    w.path.push_back(
                        AddrStep{AddrStep::Block{std::make_shared<Address>(std::move(idx))}});
                    Address rest = canonical_address(t->family[static_cast<std::size_t>(j)]);
                    for (auto& s : rest.path) w.path.push_back(std::move(s));
                    return w;
                }
            }
            break;
        }
        case Term::Kind::LimSum: {
            int n = std::get<AddrStep::Stage>(a.path[i].step).n;
            TermPtr stage = t->a;
            for (int k = 0; k < n; ++k) stage = t_sum(stage, t->b);
            Address rest;
            rest.path.assign(a.path.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.path.end());
            if (below ? exists_below(stage, rest) : exists_above(stage, rest)) {
                Address w;
                w.path.push_back(AddrStep{AddrStep::Stage{n}});
                Address inner = below ? witness_below(stage, rest) : witness_above(stage, rest);
                for (auto& s : inner.path) w.path.push_back(std::move(s));
                return w;
            }
            // the next stage attaches fresh step points beside the element
            Address w;
            w.path.push_back(AddrStep{AddrStep::Stage{n + 1}});
            w.path.push_back(AddrStep{AddrStep::Block{std::make_shared<Address>(rest)}});
            Address side =
                below ? witness_below(t->b, t->basepoint) : witness_above(t->b, t->basepoint);
            for (auto& s : side.path) w.path.push_back(std::move(s));
            return w;
        }
        default:
            break;
    }
    throw ValidationError("no element on the requested side");
}

} // namespace

Address witness_below(const TermPtr& t, const Address& a) { return witness_dir(t, a, 0, true); }
Address witness_above(const TermPtr& t, const Address& a) { return witness_dir(t, a, 0, false); }

bool term_is_empty(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::Fin: return t->poset.size() == 0;
        case Term::Kind::Ord: return t->ord.is_zero();
        case Term::Kind::Kappa:
        case Term::Kind::Rats:
        case Term::Kind::QKappa:
        case Term::Kind::Ac:
        case Term::Kind::AcOmega: return false;
        case Term::Kind::Inv: return term_is_empty(t->a);
        case Term::Kind::SumConst: return term_is_empty(t->a) || term_is_empty(t->b);
        case Term::Kind::SumList: {
            for (const auto& f : t->family)
                if (!term_is_empty(f)) return false;
            return true;
        }
        case Term::Kind::LimSum:
            return term_is_empty(t->a);
    }
    return true;
}

std::string Term::str() const {
    switch (kind) {
        case Kind::Fin: {
            std::string out = "fin(" + std::to_string(poset.size()) + ";";
            bool first = true;
            for (auto [a_, b_] : poset.cover_pairs()) {
                out += first ? " " : ", ";
                first = false;
                out += std::to_string(a_) + "<" + std::to_string(b_);
            }
            out += ")";
            return out;
        }
        case Kind::Ord: {
            std::uint64_t n = 0;
            if (ord.as_finite(n)) return std::to_string(n);
            if (ord == CnfOrdinal::omega()) return "w";
            return "ord(" + ord.str() + ")";
        }
        case Kind::Kappa: return "k";
        case Kind::Rats: return "Q";
        case Kind::QKappa: return "Qk";
        case Kind::Ac: return "ac(" + std::to_string(ac_n) + ")";
        case Kind::AcOmega: return "ac(w)";
        case Kind::Inv:
            if (a->kind == Kind::Ord && a->ord == CnfOrdinal::omega()) return "w*";
            if (a->kind == Kind::Kappa) return "k*";
            return "inv(" + a->str() + ")";
        case Kind::SumConst: return "sum(" + a->str() + ", " + b->str() + ")";
        case Kind::SumList: {
            std::string idx;
            if (poset.width() == poset.size() && poset.size() >= 2)
                idx = "ac(" + std::to_string(poset.size()) + ")";
            else if (poset.is_linear())
                idx = std::to_string(poset.size());
            else {
                idx = "fin(" + std::to_string(poset.size()) + ";";
                bool first = true;
                for (auto [x, y] : poset.cover_pairs()) {
                    idx += first ? " " : ", ";
                    first = false;
                    idx += std::to_string(x) + "<" + std::to_string(y);
                }
                idx += ")";
            }
            std::string out = "lsum(" + idx + "; ";
            for (std::size_t i = 0; i < family.size(); ++i) {
                if (i) out += ", ";
                out += family[i]->str();
            }
            return out + ")";
        }
        case Kind::LimSum: {
            std::string out = "limsum(" + a->str() + ", " + b->str();
            Address canon = canonical_address(b);
            if (!(basepoint == canon)) out += ", " + basepoint.str();
            return out + ")";
        }
    }
    return "?";
}

} // namespace ordcalc
