#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ordcalc/address.hpp"
#include "ordcalc/finposet.hpp"
#include "ordcalc/ordinal.hpp"

namespace ordcalc {

class Term;
using TermPtr = std::shared_ptr<const Term>;

// AST of the order calculus. Nodes are immutable and shared. Construction
// normalizes: finite linear posets and finite antichains of size one become
// Ord(n); the omega/omega* and kappa* surface forms become Ord(w) and
// Inv(...) nodes.
class Term {
public:
    enum class Kind {
        Fin,      // explicit finite poset (kept only when nonlinear)
        Ord,      // ordinal below epsilon_0
        Kappa,    // the symbolic uncountable regular cardinal, as an ordinal
        Rats,     // the rationals
        QKappa,   // a strongly kappa-dense linear order of size kappa
        Ac,       // finite antichain, n >= 2
        AcOmega,  // countably infinite antichain
        Inv,      // inverse order
        SumConst, // lexicographic sum of constant copies of b along index a
        SumList,  // lexicographic sum of family along a finite index poset
        LimSum,   // direct limit: stage 0 = a, stage n+1 = sum along stage n
                  // of copies of b, identifying x with (x, basepoint)
    };

    Kind kind;
    FinPoset poset;              // Fin payload, SumList index
    CnfOrdinal ord;              // Ord payload
    std::uint64_t ac_n = 0;      // Ac payload
    TermPtr a, b;                // Inv: a; SumConst: a=index, b=summand; LimSum: a=base, b=step
    std::vector<TermPtr> family; // SumList payload
    Address basepoint;           // LimSum payload

    std::uint64_t hash = 0; // structural hash, filled at construction

    std::string str() const;
};

bool term_eq(const TermPtr& x, const TermPtr& y);

TermPtr t_ord(const CnfOrdinal& o);
TermPtr t_nat(std::uint64_t n);
TermPtr t_omega();
TermPtr t_omega_star();
TermPtr t_kappa();
TermPtr t_kappa_star();
TermPtr t_rats();
TermPtr t_qkappa();
TermPtr t_ac(std::uint64_t n);
TermPtr t_ac_omega();
TermPtr t_fin(const FinPoset& p);
TermPtr t_inv(TermPtr t);
TermPtr t_sum(TermPtr index, TermPtr summand);
TermPtr t_lsum(const FinPoset& index, std::vector<TermPtr> family);
TermPtr t_limsum(TermPtr base, TermPtr step, const Address& basepoint);
// Uses the canonical basepoint of the step term.
TermPtr t_limsum(TermPtr base, TermPtr step);

// The structurally least coordinate of a nonempty term: ordinal 0 at
// ordinal leaves, element 0 at finite leaves, 0/1 at dense leaves, stage 0
// through limits. Used as the default basepoint.
Address canonical_address(const TermPtr& t);

// Stage term of a direct limit: stage 0 = base, stage n+1 = SumConst(stage n, step).
TermPtr limsum_stage(const TermPtr& limsum, int n);

// True when the term denotes the empty order.
bool term_is_empty(const TermPtr& t);

// Structural validity of an address against a term. Coordinates of the
// symbolic kappa leaf accept any ordinal below epsilon_0.
bool valid_address(const TermPtr& t, const Address& a);

// Whether some element lies strictly below / above the element at the
// given address. Decidable structurally, without instantiation.
bool exists_below(const TermPtr& t, const Address& a);
bool exists_above(const TermPtr& t, const Address& a);

// A concrete such element; requires the corresponding exists_* to hold.
Address witness_below(const TermPtr& t, const Address& a);
Address witness_above(const TermPtr& t, const Address& a);

} // namespace ordcalc
