#pragma once

#include <optional>
#include <string>

#include "ordcalc/ordinal.hpp"
#include "ordcalc/term.hpp"

namespace ordcalc {

// Coarse cardinality lattice {fin(n), aleph0, kappa}. Constructions leaving
// the lattice are rejected at validation rather than approximated.
struct CardClass {
    enum class Kind { Fin, Aleph0, Kappa };
    Kind kind = Kind::Fin;
    std::uint64_t n = 0; // meaningful for Fin

    static CardClass fin(std::uint64_t n) { return {Kind::Fin, n}; }
    static CardClass aleph0() { return {Kind::Aleph0, 0}; }
    static CardClass kappa() { return {Kind::Kappa, 0}; }

    bool is_zero() const { return kind == Kind::Fin && n == 0; }
    bool is_finite() const { return kind == Kind::Fin; }
    bool below_kappa() const { return kind != Kind::Kappa; }
    bool at_least(std::uint64_t m) const { return kind != Kind::Fin || n >= m; }

    std::string str() const;
    bool operator==(const CardClass& o) const { return kind == o.kind && (kind != Kind::Fin || n == o.n); }
};

CardClass card_mul(const CardClass& a, const CardClass& b);
CardClass card_add(const CardClass& a, const CardClass& b);
CardClass card_sup(const CardClass& a, const CardClass& b);

// Hierarchy membership certificate. in_h is a soundness claim: true means
// the engine certifies membership; false means not certified (and for terms
// that are not kappa-scattered or not FAC, genuinely outside).
struct HierInfo {
    bool in_h = false;
    CnfOrdinal alpha_bound;                 // level upper bound, valid when in_h
    std::optional<CnfOrdinal> rho_bound;    // antichain-rank bound, present when FAC
    CardClass rho_tag;                      // antichain cardinality the bound was derived from
};

// Synthesized attribute bundle for one term. The three end-structure flags
// apply to linear terms only and are reported as not-applicable otherwise.
struct AttrReport {
    CardClass card;
    bool linear = false;
    bool fac = false;
    bool kappa_ac = false;
    CardClass ac_card;

    bool wf_omega = false;   // no strictly decreasing omega-sequence
    bool wf_kappa = false;   // no strictly decreasing kappa-sequence
    bool cowf_omega = false; // no strictly increasing omega-sequence
    bool cowf_kappa = false;

    std::optional<bool> has_first;
    std::optional<bool> has_last;
    std::optional<bool> has_adjacent_pair;

    bool weakly_kappa_dense = false;        // linear, >=2 elements, every interval >= kappa
    bool embeds_weakly_kappa_dense = false; // some suborder is a weakly kappa-dense linear order
    bool weakly_kappa_scattered = false;    // embeds no strongly kappa-dense order
    bool strongly_kappa_scattered = false;  // embeds no weakly kappa-dense linear order
    bool scattered_omega = false;           // embeds no copy of the rationals

    HierInfo hier;
};

enum class RhoFormula {
    Product, // structural recursion: nat_prod across sum levels, nat_sum
             // across the index's antichains
    Width,   // bound by the maximum antichain cardinality
};

// Bottom-up attribute synthesis. Pure; results are memoized per node under
// a shared read-mostly table.
AttrReport attrs(const TermPtr& t);

HierInfo hierarchy_info(const TermPtr& t);

// Conjectured antichain-rank upper bound for FAC terms. Soundness is not
// asserted by formula; it is enforced empirically by the domination check
// (every sampled finite restriction has exact rank at most this bound).
CnfOrdinal rho_surrogate(const TermPtr& t, RhoFormula formula = RhoFormula::Product);

enum class KappaAcClass { Fac, KappaAcOnly, LargeAntichain };
KappaAcClass classify_kappa_ac(const TermPtr& t);
std::string kappa_ac_class_name(KappaAcClass c);

// True when a QKappa / Rats leaf occurs in a live position (reachable
// through nonempty context).
bool live_qkappa(const TermPtr& t);
bool live_rats_or_qkappa(const TermPtr& t);

} // namespace ordcalc
