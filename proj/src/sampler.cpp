#include "ordcalc/sampler.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "ordcalc/error.hpp"

namespace ordcalc {

Instantiation Instantiation::standard() {
    Instantiation i;
    i.kappa_value = nat_prod(CnfOrdinal::omega(), CnfOrdinal::omega()); // w^2
    return i;
}

std::string Instantiation::describe() const {
    return "kappa=" + kappa_value.str() + ", Qk=Q (UNSOUND for kappa-level claims)";
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    return bound == 0 ? 0 : next() % bound;
}

Cmp invert(Cmp c) {
    if (c == Cmp::Less) return Cmp::Greater;
    if (c == Cmp::Greater) return Cmp::Less;
    return c;
}

namespace {

Address subaddress(const Address& a, std::size_t from) {
    Address r;
    r.path.assign(a.path.begin() + static_cast<std::ptrdiff_t>(from), a.path.end());
    return r;
}

Cmp cmp_ord_coords(const CnfOrdinal& x, const CnfOrdinal& y) {
    auto c = x <=> y;
    if (c < 0) return Cmp::Less;
    if (c > 0) return Cmp::Greater;
    return Cmp::Equal;
}

Cmp cmp_rec(const TermPtr& t, const Address& a, std::size_t ia, const Address& b, std::size_t ib,
            const Instantiation& inst) {
    switch (t->kind) {
        case Term::Kind::Inv:
            return invert(cmp_rec(t->a, a, ia, b, ib, inst));
        case Term::Kind::Ord:
        case Term::Kind::Kappa: {
            if (ia >= a.path.size() || ib >= b.path.size())
                throw ValidationError("malformed address: missing ordinal coordinate");
            return cmp_ord_coords(std::get<AddrStep::LeafOrd>(a.path[ia].step).v,
                                  std::get<AddrStep::LeafOrd>(b.path[ib].step).v);
        }
        case Term::Kind::Rats:
        case Term::Kind::QKappa: {
            const auto& x = std::get<AddrStep::LeafRat>(a.path[ia].step).v;
            const auto& y = std::get<AddrStep::LeafRat>(b.path[ib].step).v;
            auto c = x <=> y;
            return c < 0 ? Cmp::Less : c > 0 ? Cmp::Greater : Cmp::Equal;
        }
        case Term::Kind::Fin: {
            auto x = std::get<AddrStep::LeafInt>(a.path[ia].step).v;
            auto y = std::get<AddrStep::LeafInt>(b.path[ib].step).v;
            if (x == y) return Cmp::Equal;
            if (t->poset.lt(static_cast<int>(x), static_cast<int>(y))) return Cmp::Less;
            if (t->poset.lt(static_cast<int>(y), static_cast<int>(x))) return Cmp::Greater;
            return Cmp::Incomparable;
        }
        case Term::Kind::Ac:
        case Term::Kind::AcOmega: {
            auto x = std::get<AddrStep::LeafInt>(a.path[ia].step).v;
            auto y = std::get<AddrStep::LeafInt>(b.path[ib].step).v;
            return x == y ? Cmp::Equal : Cmp::Incomparable;
        }
        case Term::Kind::SumConst: {
            const auto& ba = std::get<AddrStep::Block>(a.path[ia].step);
            const auto& bb = std::get<AddrStep::Block>(b.path[ib].step);
            Cmp c = cmp_rec(t->a, *ba.index, 0, *bb.index, 0, inst);
            if (c != Cmp::Equal) return c;
            return cmp_rec(t->b, a, ia + 1, b, ib + 1, inst);
        }
        case Term::Kind::SumList: {
            const auto& ba = std::get<AddrStep::Block>(a.path[ia].step);
            const auto& bb = std::get<AddrStep::Block>(b.path[ib].step);
            auto x = std::get<AddrStep::LeafInt>(ba.index->path[0].step).v;
            auto y = std::get<AddrStep::LeafInt>(bb.index->path[0].step).v;
            if (x == y) return cmp_rec(t->family[static_cast<std::size_t>(x)], a, ia + 1, b, ib + 1, inst);
            if (t->poset.lt(static_cast<int>(x), static_cast<int>(y))) return Cmp::Less;
            if (t->poset.lt(static_cast<int>(y), static_cast<int>(x))) return Cmp::Greater;
            return Cmp::Incomparable;
        }
        case Term::Kind::LimSum: {
            int na = std::get<AddrStep::Stage>(a.path[ia].step).n;
            int nb = std::get<AddrStep::Stage>(b.path[ib].step).n;
            int m = std::max(na, nb);
            Address ra = subaddress(a, ia + 1);
            Address rb = subaddress(b, ib + 1);
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
            return cmp_rec(stage, ra, 0, rb, 0, inst);
        }
    }
    throw Error("unreachable");
}

} // namespace

Cmp compare(const TermPtr& t, const Address& a, const Address& b, const Instantiation& inst) {
    if (!valid_address(t, a) || !valid_address(t, b))
        throw ValidationError("malformed address for term " + t->str());
    return cmp_rec(t, a, 0, b, 0, inst);
}

namespace {

CnfOrdinal rand_ord_below(SplitMix64& rng, const CnfOrdinal& alpha, int width) {
    if (alpha.is_zero()) throw ValidationError("no ordinal below 0");
    const auto& ts = alpha.terms();
    std::size_t i = static_cast<std::size_t>(rng.below(ts.size()));
    std::vector<CnfTerm> out(ts.begin(), ts.begin() + static_cast<std::ptrdiff_t>(i));
    std::uint64_t c = rng.below(ts[i].coeff);
    if (c > 0) out.push_back(CnfTerm{ts[i].exp, c});
    if (!ts[i].exp.is_zero() && rng.below(2) == 1) {
        // a tail strictly below w^{e_i}
        CnfOrdinal e2 = rand_ord_below(rng, ts[i].exp, width);
        if (!e2.is_zero()) {
            out.push_back(CnfTerm{e2, 1 + rng.below(static_cast<std::uint64_t>(width))});
            out.push_back(CnfTerm{CnfOrdinal(), rng.below(static_cast<std::uint64_t>(width))});
        } else {
            out.push_back(CnfTerm{CnfOrdinal(), 1 + rng.below(static_cast<std::uint64_t>(width))});
        }
    }
    return CnfOrdinal::from_terms(std::move(out));
}

Address rand_addr(const TermPtr& t, SplitMix64& rng, const SampleWeights& w,
                  const Instantiation& inst);

void canonicalize_stage(const TermPtr& limsum, int& stage, Address& rest) {
    while (stage > 0) {
        if (rest.path.empty()) return;
        auto* bl = std::get_if<AddrStep::Block>(&rest.path[0].step);
        if (!bl) return;
        if (rest.path.size() != 1 + limsum->basepoint.path.size()) return;
        bool tail_is_bp = true;
        for (std::size_t i = 0; i < limsum->basepoint.path.size() && tail_is_bp; ++i) {
            Address lhs, rhs;
            lhs.path.push_back(rest.path[i + 1]);
            rhs.path.push_back(limsum->basepoint.path[i]);
            if (!(lhs == rhs)) tail_is_bp = false;
        }
        if (!tail_is_bp) return;
        Address inner = *bl->index;
        rest = std::move(inner);
        --stage;
    }
}

Address rand_addr(const TermPtr& t, SplitMix64& rng, const SampleWeights& w,
                  const Instantiation& inst) {
    Address a;
    const Term* cur = t.get();
    TermPtr hold = t;
    for (;;) {
        switch (cur->kind) {
            case Term::Kind::Fin:
                a.path.push_back(AddrStep{AddrStep::LeafInt{
                    static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(cur->poset.size())))}});
                return a;
            case Term::Kind::Ac:
                a.path.push_back(AddrStep{AddrStep::LeafInt{
                    static_cast<std::int64_t>(rng.below(cur->ac_n))}});
                return a;
            case Term::Kind::AcOmega:
                a.path.push_back(AddrStep{AddrStep::LeafInt{
                    static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(4 * w.leaf_width)))}});
                return a;
            case Term::Kind::Ord:
                a.path.push_back(AddrStep{AddrStep::LeafOrd{rand_ord_below(rng, cur->ord, w.leaf_width)}});
                return a;
            case Term::Kind::Kappa:
                a.path.push_back(
                    AddrStep{AddrStep::LeafOrd{rand_ord_below(rng, inst.kappa_value, w.leaf_width)}});
                return a;
            case Term::Kind::Rats:
            case Term::Kind::QKappa: {
                std::int64_t den = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(w.leaf_width)));
                std::int64_t num = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(4 * w.leaf_width))) -
                                   2 * w.leaf_width;
                a.path.push_back(AddrStep{AddrStep::LeafRat{Rational::make(num, den)}});
                return a;
            }
            case Term::Kind::Inv:
                hold = cur->a;
                cur = hold.get();
                break;
            case Term::Kind::SumConst: {
                Address idx = rand_addr(cur->a, rng, w, inst);
                a.path.push_back(AddrStep{AddrStep::Block{std::make_shared<Address>(std::move(idx))}});
                hold = cur->b;
                cur = hold.get();
                break;
            }
            case Term::Kind::SumList: {
                std::vector<int> live;
                for (std::size_t i = 0; i < cur->family.size(); ++i)
                    if (!term_is_empty(cur->family[i])) live.push_back(static_cast<int>(i));
                if (live.empty()) throw ValidationError("cannot sample the empty order");
                int pick = live[static_cast<std::size_t>(rng.below(live.size()))];
                Address idx;
                idx.path.push_back(AddrStep{AddrStep::LeafInt{pick}});
                a.path.push_back(AddrStep{AddrStep::Block{std::make_shared<Address>(std::move(idx))}});
                hold = cur->family[static_cast<std::size_t>(pick)];
                cur = hold.get();
                break;
            }
            case Term::Kind::LimSum: {
                int stage = static_cast<int>(rng.below(static_cast<std::uint64_t>(w.max_stage + 1)));
                TermPtr st = hold; // current node as TermPtr
                TermPtr stage_term = limsum_stage(st, stage);
                Address rest = rand_addr(stage_term, rng, w, inst);
                canonicalize_stage(st, stage, rest);
                a.path.push_back(AddrStep{AddrStep::Stage{stage}});
                for (auto& s : rest.path) a.path.push_back(std::move(s));
                return a;
            }
        }
    }
}

void enum_rec(const TermPtr& t, std::vector<Address>& out, const Instantiation& inst) {
    if (term_is_empty(t)) return; // dead subterms may hold infinite leaves
    switch (t->kind) {
        case Term::Kind::Fin:
            for (int i = 0; i < t->poset.size(); ++i) {
                Address a;
                a.path.push_back(AddrStep{AddrStep::LeafInt{i}});
                out.push_back(std::move(a));
            }
            return;
        case Term::Kind::Ac:
            for (std::uint64_t i = 0; i < t->ac_n; ++i) {
                Address a;
                a.path.push_back(AddrStep{AddrStep::LeafInt{static_cast<std::int64_t>(i)}});
                out.push_back(std::move(a));
            }
            return;
        case Term::Kind::Ord: {
            std::uint64_t n = 0;
            if (!t->ord.as_finite(n)) throw ValidationError("cannot enumerate an infinite term");
            for (std::uint64_t i = 0; i < n; ++i) {
                Address a;
                a.path.push_back(AddrStep{AddrStep::LeafOrd{CnfOrdinal::finite(i)}});
                out.push_back(std::move(a));
            }
            return;
        }
        case Term::Kind::Inv:
            enum_rec(t->a, out, inst);
            return;
        case Term::Kind::SumConst: {
            std::vector<Address> idx, rest;
            enum_rec(t->a, idx, inst);
            enum_rec(t->b, rest, inst);
            for (const auto& i : idx)
                for (const auto& r : rest) {
                    Address a;
                    a.path.push_back(AddrStep{AddrStep::Block{std::make_shared<Address>(i)}});
                    for (const auto& s : r.path) a.path.push_back(s);
                    out.push_back(std::move(a));
                }
            return;
        }
        case Term::Kind::SumList: {
            for (std::size_t bi = 0; bi < t->family.size(); ++bi) {
                std::vector<Address> rest;
                enum_rec(t->family[bi], rest, inst);
                for (const auto& r : rest) {
                    Address idx;
                    idx.path.push_back(AddrStep{AddrStep::LeafInt{static_cast<std::int64_t>(bi)}});
                    Address a;
                    a.path.push_back(AddrStep{AddrStep::Block{std::make_shared<Address>(std::move(idx))}});
                    for (const auto& s : r.path) a.path.push_back(s);
                    out.push_back(a);
                }
            }
            return;
        }
        case Term::Kind::LimSum: {
            AttrReport rs = attrs(t->b);
            if (!(rs.card == CardClass::fin(1)))
                throw ValidationError("cannot enumerate an infinite term");
            std::vector<Address> rest;
            enum_rec(t->a, rest, inst);
            for (const auto& r : rest) {
                Address a;
                a.path.push_back(AddrStep{AddrStep::Stage{0}});
                for (const auto& s : r.path) a.path.push_back(s);
                out.push_back(a);
            }
            return;
        }
        default:
            throw ValidationError("cannot enumerate an infinite term");
    }
}

} // namespace

std::vector<Address> enumerate_addresses(const TermPtr& t, const Instantiation& inst) {
    std::vector<Address> out;
    if (!term_is_empty(t)) enum_rec(t, out, inst);
    return out;
}

Sample sample_restriction(const TermPtr& t, int n, std::uint64_t seed, const SampleWeights& w,
                          const Instantiation& inst) {
    if (term_is_empty(t)) throw ValidationError("cannot sample the empty order");
    if (n < 1 || n > FinPoset::kMaxElements)
        throw ValidationError("sample size must be between 1 and 64");
    Sample s;
    s.term = t;
    s.seed = seed;
    s.inst = inst;
    AttrReport r = attrs(t);
    if (r.card.is_finite() && r.card.n <= static_cast<std::uint64_t>(n)) {
        s.addresses = enumerate_addresses(t, inst);
        s.truncated = s.addresses.size() < static_cast<std::size_t>(n);
    } else {
        SplitMix64 rng(seed ^ 0x5eed5eedull);
        std::set<std::string> seen;
        int attempts = 0, limit = 200 * n;
        while (static_cast<int>(s.addresses.size()) < n && attempts < limit) {
            ++attempts;
            Address a = rand_addr(t, rng, w, inst);
            if (seen.insert(a.str()).second) s.addresses.push_back(std::move(a));
        }
        s.truncated = static_cast<int>(s.addresses.size()) < n;
    }
    int m = static_cast<int>(s.addresses.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            if (cmp_rec(t, s.addresses[static_cast<std::size_t>(i)], 0,
                        s.addresses[static_cast<std::size_t>(j)], 0, inst) == Cmp::Less)
                pairs.emplace_back(i, j);
        }
    s.poset = FinPoset::from_relations(m, pairs);
    return s;
}

std::string Sample::to_json() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["term"] = term->str();
    j["seed"] = seed;
    j["instantiation"] = inst.describe();
    j["truncated"] = truncated;
    j["addresses"] = nlohmann::json::array();
    for (const auto& a : addresses) j["addresses"].push_back(a.str());
    j["pairs"] = nlohmann::json::array();
    for (auto [a, b] : poset.pairs()) j["pairs"].push_back({a, b});
    return j.dump(2);
}

namespace {

// Constructive monotone chains. descending=true builds x0 > x1 > ... in the
// term order. Nullopt when the requested length cannot be produced.
std::optional<std::vector<Address>> chain_rec(const TermPtr& t, int len, bool descending,
                                              const Instantiation& inst) {
    if (len <= 0) return std::vector<Address>{};
    if (term_is_empty(t)) return std::nullopt;
    switch (t->kind) {
        case Term::Kind::Inv: {
            auto inner = chain_rec(t->a, len, !descending, inst);
            return inner;
        }
        case Term::Kind::Ord:
        case Term::Kind::Kappa: {
            CnfOrdinal bound = t->kind == Term::Kind::Kappa ? inst.kappa_value : t->ord;
            std::uint64_t n = 0;
            bool fin = bound.as_finite(n);
            std::uint64_t avail = fin ? n : static_cast<std::uint64_t>(len);
            if (avail < static_cast<std::uint64_t>(len)) return std::nullopt;
            std::vector<Address> out;
            for (int i = 0; i < len; ++i) {
                std::uint64_t coord = descending ? static_cast<std::uint64_t>(len - 1 - i)
                                                 : static_cast<std::uint64_t>(i);
                Address a;
                a.path.push_back(AddrStep{AddrStep::LeafOrd{CnfOrdinal::finite(coord)}});
                out.push_back(std::move(a));
            }
            return out;
        }
        case Term::Kind::Rats:
        case Term::Kind::QKappa: {
            std::vector<Address> out;
            for (int i = 0; i < len; ++i) {
                std::int64_t v = descending ? -i : i;
                Address a;
                a.path.push_back(AddrStep{AddrStep::LeafRat{Rational{v, 1}}});
                out.push_back(std::move(a));
            }
            return out;
        }
        case Term::Kind::Fin: {
            // longest chain by DP over the finite order
            int n = t->poset.size();
            std::vector<int> best(static_cast<std::size_t>(n), 1), nxt(static_cast<std::size_t>(n), -1);
            // process in an order compatible with lt: repeat relaxation n times
            for (int rep = 0; rep < n; ++rep)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (t->poset.lt(i, j) &&
                            best[static_cast<std::size_t>(j)] + 1 > best[static_cast<std::size_t>(i)]) {
                            best[static_cast<std::size_t>(i)] = best[static_cast<std::size_t>(j)] + 1;
                            nxt[static_cast<std::size_t>(i)] = j;
                        }
            int s = -1;
            for (int i = 0; i < n; ++i)
                if (best[static_cast<std::size_t>(i)] >= len) s = i;
            if (s == -1) return std::nullopt;
            std::vector<Address> out;
            for (int v = s; v != -1 && static_cast<int>(out.size()) < len;
                 v = nxt[static_cast<std::size_t>(v)]) {
                Address a;
                a.path.push_back(AddrStep{AddrStep::LeafInt{v}});
                out.push_back(std::move(a));
            }
            if (static_cast<int>(out.size()) < len) return std::nullopt;
            if (descending) std::reverse(out.begin(), out.end());
            return out;
        }
        case Term::Kind::Ac:
        case Term::Kind::AcOmega: {
            if (len > 1) return std::nullopt;
            Address a;
            a.path.push_back(AddrStep{AddrStep::LeafInt{0}});
            return std::vector<Address>{a};
        }
        case Term::Kind::SumConst: {
            if (auto idx_chain = chain_rec(t->a, len, descending, inst)) {
                Address rest = canonical_address(t->b);
                std::vector<Address> out;
                for (auto& i : *idx_chain) {
                    Address a;
                    a.path.push_back(AddrStep{AddrStep::Block{std::make_shared<Address>(std::move(i))}});
                    for (const auto& sp : rest.path) a.path.push_back(sp);
                    out.push_back(std::move(a));
                }
                return out;
            }
            if (auto blk_chain = chain_rec(t->b, len, descending, inst)) {
                Address idx = canonical_address(t->a);
                std::vector<Address> out;
                for (auto& bstep : *blk_chain) {
                    Address a;
                    a.path.push_back(AddrStep{AddrStep::Block{std::make_shared<Address>(idx)}});
                    for (const auto& sp : bstep.path) a.path.push_back(sp);
                    out.push_back(std::move(a));
                }
                return out;
            }
            return std::nullopt;
        }
        case Term::Kind::SumList: {
            for (std::size_t bi = 0; bi < t->family.size(); ++bi) {
                if (term_is_empty(t->family[bi])) continue;
                if (auto blk = chain_rec(t->family[bi], len, descending, inst)) {
                    std::vector<Address> out;
                    for (auto& bstep : *blk) {
                        Address idx;
                        idx.path.push_back(AddrStep{AddrStep::LeafInt{static_cast<std::int64_t>(bi)}});
                        Address a;
                        a.path.push_back(AddrStep{AddrStep::Block{std::make_shared<Address>(std::move(idx))}});
                        for (const auto& sp : bstep.path) a.path.push_back(sp);
                        out.push_back(std::move(a));
                    }
                    return out;
                }
            }
            return std::nullopt;
        }
        case Term::Kind::LimSum: {
            bool through = descending ? exists_below(t->b, t->basepoint)
                                      : exists_above(t->b, t->basepoint);
            if (through) {
                // stage descent: each round attaches a fresh copy of the step
                // beside the previous element's basepoint image
                std::vector<Address> out;
                Address curr = canonical_address(t->a); // address within stage 0
                // a step element strictly on the required side of the basepoint
                Address side = descending ? witness_below(t->b, t->basepoint)
                                          : witness_above(t->b, t->basepoint);
                for (int i = 0; i < len; ++i) {
                    Address a;
                    a.path.push_back(AddrStep{AddrStep::Stage{i}});
                    for (const auto& sp : curr.path) a.path.push_back(sp);
                    out.push_back(a);
                    // descend: next element lives at stage i+1 inside the block of curr
                    Address next;
                    next.path.push_back(AddrStep{AddrStep::Block{std::make_shared<Address>(curr)}});
                    for (const auto& sp : side.path) next.path.push_back(sp);
                    curr = std::move(next);
                }
                return out;
            }
            TermPtr stage1 = limsum_stage(t, 1);
            if (auto within = chain_rec(stage1, len, descending, inst)) {
                std::vector<Address> out;
                for (auto& x : *within) {
                    int stage = 1;
                    Address rest = x;
                    canonicalize_stage(t, stage, rest);
                    Address a;
                    a.path.push_back(AddrStep{AddrStep::Stage{stage}});
                    for (const auto& sp : rest.path) a.path.push_back(sp);
                    out.push_back(std::move(a));
                }
                return out;
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<std::vector<Address>> descending_chain(const TermPtr& t, int len,
                                                     const Instantiation& inst) {
    return chain_rec(t, len, true, inst);
}

std::optional<std::vector<Address>> ascending_chain(const TermPtr& t, int len,
                                                    const Instantiation& inst) {
    return chain_rec(t, len, false, inst);
}

std::vector<Violation> oracle_check(const TermPtr& t, const AttrReport& report,
                                    const OracleBudget& budget) {
    std::vector<Violation> out;
    Instantiation inst = Instantiation::standard();
    auto add = [&](const std::string& prop, const std::string& detail,
                   std::vector<std::string> wit = {}) {
        out.push_back(Violation{prop, detail, t->str(), std::move(wit)});
    };
    if (term_is_empty(t)) return out;

    for (int si = 0; si < budget.samples; ++si) {
        std::uint64_t seed = budget.seed + static_cast<std::uint64_t>(si) * 7919;
        Sample s = sample_restriction(t, budget.sample_size, seed);
        const FinPoset& p = s.poset;
        int n = p.size();
        // strict partial order on the sample
        for (int i = 0; i < n; ++i) {
            if (p.lt(i, i)) add("irreflexive", "lt(i,i) in sample", {s.addresses[static_cast<std::size_t>(i)].str()});
            for (int j = 0; j < n; ++j) {
                if (i != j && p.lt(i, j) && p.lt(j, i))
                    add("antisymmetric", "two-cycle in sample",
                        {s.addresses[static_cast<std::size_t>(i)].str(),
                         s.addresses[static_cast<std::size_t>(j)].str()});
                for (int k = 0; k < n; ++k)
                    if (p.lt(i, j) && p.lt(j, k) && !p.lt(i, k))
                        add("transitive", "broken transitivity in sample",
                            {s.addresses[static_cast<std::size_t>(i)].str(),
                             s.addresses[static_cast<std::size_t>(j)].str(),
                             s.addresses[static_cast<std::size_t>(k)].str()});
            }
        }
        if (report.linear && !p.is_linear())
            add("linear", "incomparable pair sampled from a linear term");
        if (report.ac_card.is_finite()) {
            int w = p.width();
            if (w > static_cast<int>(report.ac_card.n))
                add("antichain_cap", "sampled antichain of size " + std::to_string(w) +
                                         " exceeds ac_card " + report.ac_card.str());
        }
        if (report.fac) {
            // rho bound must dominate the exact rank of sampled restrictions
            Sample small = sample_restriction(t, budget.rank_sample_size, seed ^ 0xabcd);
            CnfOrdinal exact = antichain_rank_exact(small.poset);
            CnfOrdinal bound = rho_surrogate(t, RhoFormula::Product);
            CnfOrdinal bound_w = rho_surrogate(t, RhoFormula::Width);
            if (bound < exact)
                add("rho_dominates", "exact rank " + exact.str() + " exceeds product bound " +
                                         bound.str());
            if (bound_w < exact)
                add("rho_dominates", "exact rank " + exact.str() + " exceeds width bound " +
                                         bound_w.str());
        }
    }
    // refutation probes: claimed failure of well-foundedness must be witnessed
    if (!report.wf_omega) {
        auto c = descending_chain(t, budget.chain_length, inst);
        if (!c)
            add("wf_refutation", "wf_omega=false but no descending chain of length " +
                                     std::to_string(budget.chain_length) + " found");
        else {
            for (std::size_t i = 0; i + 1 < c->size(); ++i)
                if (compare(t, (*c)[i + 1], (*c)[i], inst) != Cmp::Less)
                    add("wf_refutation", "claimed descending chain is not descending",
                        {(*c)[i].str(), (*c)[i + 1].str()});
        }
    }
    if (!report.cowf_omega) {
        auto c = ascending_chain(t, budget.chain_length, inst);
        if (!c)
            add("cowf_refutation", "cowf_omega=false but no ascending chain of length " +
                                       std::to_string(budget.chain_length) + " found");
        else {
            for (std::size_t i = 0; i + 1 < c->size(); ++i)
                if (compare(t, (*c)[i], (*c)[i + 1], inst) != Cmp::Less)
                    add("cowf_refutation", "claimed ascending chain is not ascending",
                        {(*c)[i].str(), (*c)[i + 1].str()});
        }
    }
    return out;
}

} // namespace ordcalc
